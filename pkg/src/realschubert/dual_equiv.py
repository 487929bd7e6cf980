"""Dual equivalence classes, chains of classes, and the operators sh_i, ev_i and esh_i.

A class is stored as its canonical representative: the unique member whose
rectification is the superstandard tableau of the rectification shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .core_shapes import (
    Partition,
    Rectangle,
    ShapeError,
    complement,
    contains,
    format_partition,
    one_box_extensions,
    partition,
    size,
)
from .growth_engine import GrowthError, growth_square, rectify, shuffle_tableaux
from .tableaux import StandardSkewTableau, rotate180, superstandard


@dataclass(frozen=True)
class DualClass:
    """A dual equivalence class, identified by its canonical representative."""

    representative: StandardSkewTableau
    rect_shape: Partition = field(compare=False)

    @property
    def inner(self) -> Partition:
        return self.representative.inner

    @property
    def outer(self) -> Partition:
        return self.representative.outer

    @property
    def size(self) -> int:
        return self.representative.size

    def __str__(self):
        return f"[{format_partition(self.outer)}/{format_partition(self.inner)} ~> {format_partition(self.rect_shape)}]"

    def to_json(self) -> dict:
        return self.representative.to_json()

    @classmethod
    def from_json(cls, obj: Mapping) -> "DualClass":
        return canonical_class(StandardSkewTableau.from_json(obj))


@lru_cache(maxsize=None)
def _canonical_chain(chain: tuple[Partition, ...]) -> tuple[tuple[Partition, ...], Partition]:
    t = StandardSkewTableau(chain)
    rectified, recording = rectify(t)
    shape = rectified.outer
    _, back = shuffle_tableaux(superstandard(shape), recording)
    return back.chain, shape


def canonical_class(t: StandardSkewTableau) -> DualClass:
    """The class of ``t``, represented by its member rectifying to a superstandard tableau."""
    chain, shape = _canonical_chain(t.chain)
    return DualClass(StandardSkewTableau(chain), shape)


def straight_class(lam: Partition) -> DualClass:
    """The unique class of straight shape ``lam``."""
    return DualClass(superstandard(partition(lam)), partition(lam))


def _canonical_tableaux(inner: Partition, bound: Partition, lam: Partition) -> Iterator[tuple[Partition, ...]]:
    """Chains from ``inner`` inside ``bound`` whose rectification is ``superstandard(lam)``.

    The rectifying growth diagram is grown one column at a time, so a branch is
    cut as soon as its rectification leaves the superstandard chain.
    """
    target = superstandard(lam).chain
    start = superstandard(inner).chain

    def rec(column: tuple[Partition, ...], chain: list[Partition]):
        m = len(chain) - 1
        if m == len(target) - 1:
            yield tuple(chain)
            return
        top = column[-1]
        for nu in one_box_extensions(top, bound):
            new = [nu]
            for j in range(len(column) - 2, -1, -1):
                new.append(growth_square(column[j], column[j + 1], new[-1]))
            new.reverse()
            if new[0] != target[m + 1]:
                continue
            chain.append(nu)
            yield from rec(tuple(new), chain)
            chain.pop()

    yield from rec(start, [inner])


@lru_cache(maxsize=None)
def classes_from(inner: Partition, bound: Partition, lam: Partition) -> tuple[DualClass, ...]:
    """All classes with inner shape ``inner``, outer shape inside ``bound`` and rectification shape ``lam``."""
    return tuple(
        DualClass(StandardSkewTableau(c), lam)
        for c in sorted(_canonical_tableaux(inner, bound, lam), key=lambda c: (c[-1], c))
    )


def classes_of_shape(inner: Partition, outer: Partition, lam: Partition) -> tuple[DualClass, ...]:
    """The set X_inner^outer(lam) of classes of shape ``outer / inner`` rectifying to ``lam``."""
    if size(outer) - size(inner) != size(lam) or not contains(outer, inner):
        return ()
    return tuple(d for d in classes_from(inner, outer, lam) if d.outer == outer)


@dataclass(frozen=True)
class DEChain:
    """A chain of dual equivalence classes ``inner -> ... -> outer``."""

    classes: tuple[DualClass, ...]
    inner: Partition
    outer: Partition

    def __post_init__(self):
        cur = self.inner
        for d in self.classes:
            if d.inner != cur:
                raise ShapeError(f"class {d} does not extend {cur}")
            cur = d.outer
        if cur != self.outer:
            raise ShapeError(f"chain ends at {cur}, expected {self.outer}")

    @property
    def type(self) -> tuple[Partition, ...]:
        return tuple(d.rect_shape for d in self.classes)

    @property
    def shapes(self) -> tuple[Partition, ...]:
        """The partitions between consecutive classes, from inner to outer."""
        return (self.inner,) + tuple(d.outer for d in self.classes)

    def __len__(self):
        return len(self.classes)

    def replace(self, i: int, *new: DualClass) -> "DEChain":
        """Replace classes ``i, i+1, ...`` (1-based) by ``new``."""
        cl = list(self.classes)
        cl[i - 1:i - 1 + len(new)] = new
        return DEChain(tuple(cl), self.inner, self.outer)

    def to_tableau(self) -> StandardSkewTableau:
        """Concatenate the representatives into one standard tableau."""
        chain = [self.inner]
        for d in self.classes:
            chain.extend(d.representative.chain[1:])
        return StandardSkewTableau(tuple(chain))

    def sort_key(self):
        return (self.shapes, tuple(d.representative.chain for d in self.classes))

    def __str__(self):
        return " ".join(str(d) for d in self.classes)

    def to_json(self) -> dict:
        return {
            "inner": list(self.inner),
            "classes": [d.to_json() for d in self.classes],
            "outer": list(self.outer),
            "type": [list(t) for t in self.type],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "DEChain":
        return cls(
            tuple(DualClass.from_json(c) for c in obj["classes"]),
            partition(obj["inner"]),
            partition(obj["outer"]),
        )


def chain_from_tableau(t: StandardSkewTableau) -> DEChain:
    """View a standard tableau as a chain of single-box classes."""
    boxes = tuple(DualClass(StandardSkewTableau((a, b)), (1,)) for a, b in zip(t.chain, t.chain[1:]))
    return DEChain(boxes, t.inner, t.outer)


def enumerate_chains(inner: Partition, outer: Partition, types: Sequence[Partition]) -> list[DEChain]:
    """All chains in X_inner^outer(types), sorted by intermediate shapes and then representatives."""
    inner, outer = partition(inner), partition(outer)
    types = tuple(partition(t) for t in types)
    if size(outer) - size(inner) != sum(size(t) for t in types) or not contains(outer, inner):
        return []
    out: list[DEChain] = []

    def rec(k: int, cur: Partition, acc: list[DualClass]):
        if k == len(types):
            if cur == outer:
                out.append(DEChain(tuple(acc), inner, outer))
            return
        last = k == len(types) - 1
        for d in classes_from(cur, outer, types[k]):
            if last and d.outer != outer:
                continue
            acc.append(d)
            rec(k + 1, d.outer, acc)
            acc.pop()

    rec(0, inner, [])
    out.sort(key=DEChain.sort_key)
    return out


@lru_cache(maxsize=None)
def _shuffle_reps(c1: tuple[Partition, ...], c2: tuple[Partition, ...]):
    t_new, s_new = shuffle_tableaux(StandardSkewTableau(c1), StandardSkewTableau(c2))
    return canonical_class(t_new), canonical_class(s_new)


def shuffle_classes(d1: DualClass, d2: DualClass) -> tuple[DualClass, DualClass]:
    """Shuffle ``(d1, d2)`` to ``(d2~, d1~)``; ``d2``'s shape must extend ``d1``'s."""
    if d2.inner != d1.outer:
        raise GrowthError(f"{d2} does not extend {d1}")
    return _shuffle_reps(d1.representative.chain, d2.representative.chain)


def _check_index(chain: DEChain, i: int, hi: int):
    if not 1 <= i <= hi:
        raise IndexError(f"index {i} out of range 1..{hi} for a chain of length {len(chain)}")


def sh(chain: DEChain, i: int) -> DEChain:
    """Shuffle classes ``i`` and ``i + 1`` (1-based)."""
    _check_index(chain, i, len(chain) - 1)
    a, b = shuffle_classes(chain.classes[i - 1], chain.classes[i])
    return chain.replace(i, a, b)


def ev_word(i: int) -> list[int]:
    """Indices of the shuffles making up ev_i, in the order they are applied."""
    return [j for m in range(i - 1, 0, -1) for j in range(1, m + 1)]


def ev(chain: DEChain, i: int) -> DEChain:
    """Evacuate the first ``i`` classes: reverses the first ``i`` entries of the type."""
    _check_index(chain, i, len(chain))
    for j in ev_word(i):
        chain = sh(chain, j)
    return chain


def _check_full(chain: DEChain):
    if chain.inner != ():
        raise ShapeError("evacuation-shuffle needs a chain starting at the empty partition")


def esh(chain: DEChain, i: int) -> DEChain:
    """Evacuation-shuffle of classes ``i`` and ``i + 1``, computed locally.

    Only the two classes and the straight class of their inner shape take part.
    """
    _check_index(chain, i, len(chain) - 1)
    _check_full(chain)
    d_i, d_next = chain.classes[i - 1], chain.classes[i]
    tau = d_i.inner
    a, b = _esh_local(tau, d_i.representative.chain, d_next.representative.chain)
    return chain.replace(i, a, b)


@lru_cache(maxsize=None)
def _esh_local(tau: Partition, c1: tuple[Partition, ...], c2: tuple[Partition, ...]):
    local = DEChain(
        (straight_class(tau), DualClass(StandardSkewTableau(c1), _canonical_chain(c1)[1]),
         DualClass(StandardSkewTableau(c2), _canonical_chain(c2)[1])),
        (),
        StandardSkewTableau(c2).outer,
    )
    for j in (1, 2, 1, 2, 1):
        local = sh(local, j)
    return local.classes[1], local.classes[2]


def esh_by_conjugation(chain: DEChain, i: int) -> DEChain:
    """esh_i as ev_{i+1} sh_1 ev_{i+1}; slower, kept as an independent check."""
    _check_index(chain, i, len(chain) - 1)
    _check_full(chain)
    return ev(sh(ev(chain, i + 1), 1), i + 1)


def rotate_class(d: DualClass, rect: Rectangle) -> DualClass:
    """The class ``D^R`` of the rotated and renumbered representative."""
    return canonical_class(rotate180(d.representative, rect))


def reverse_rotate(chain: DEChain, rect: Rectangle) -> DEChain:
    """``(D_1, ..., D_r) -> (D_r^R, ..., D_1^R)`` for a chain from empty to ``rect``."""
    classes = tuple(rotate_class(d, rect) for d in reversed(chain.classes))
    return DEChain(classes, (), rect.full)


@dataclass(frozen=True)
class Decgd:
    """One period of a dual equivalence cylindrical growth diagram.

    ``rows[d]`` is the chain along ``j = -d``; its ``q``-th class (1-based) is the
    horizontal edge label ``H_{(q - 1 + d), -d}``. ``verticals[d][p]`` labels the
    vertical edge from vertex ``(p + d, -d)`` up to ``(p + d, 1 - d)``.
    """

    rect: Rectangle
    rows: tuple[DEChain, ...]
    verticals: tuple[tuple[DualClass, ...], ...]

    @property
    def r(self) -> int:
        return len(self.rows[0])

    def vertex(self, i: int, j: int) -> Partition:
        p = i + j
        if not 0 <= p <= self.r:
            raise IndexError(f"({i}, {j}) lies outside the diagonal strip")
        return self.rows[(-j) % self.r].shapes[p]

    def horizontal(self, i: int, j: int) -> DualClass:
        p = i + j
        if not 0 <= p < self.r:
            raise IndexError(f"no horizontal edge at ({i}, {j})")
        return self.rows[(-j) % self.r].classes[p]

    def vertical(self, i: int, j: int) -> DualClass:
        p = i + j
        if not 0 <= p < self.r:
            raise IndexError(f"no vertical edge at ({i}, {j})")
        return self.verticals[(-j) % self.r][p]

    def to_json(self) -> dict:
        return {
            "rect": self.rect.to_json(),
            "rows": [c.to_json() for c in self.rows],
            "verticals": [[v.to_json() for v in col] for col in self.verticals],
        }


def next_decgd_row(chain: DEChain) -> tuple[DEChain, tuple[DualClass, ...]]:
    """Shuffle the first class of ``chain`` out to the end; return the new row and the vertical labels."""
    v = chain.classes[0]
    verts = [v]
    row = []
    for d in chain.classes[1:]:
        h, v = shuffle_classes(v, d)
        row.append(h)
        verts.append(v)
    row.append(v)
    return DEChain(tuple(row), chain.inner, chain.outer), tuple(verts)


def build_decgd(chain: DEChain, rect: Rectangle) -> Decgd:
    """Complete the decgd whose first row is ``chain`` and check its symmetries.

    Raises :class:`GrowthError` if periodicity or the rotation-complement
    identities fail.
    """
    if chain.inner != () or chain.outer != rect.full:
        raise ShapeError(f"a decgd row must run from () to {rect.full}")
    r = len(chain)
    rows = [chain]
    verticals: list[tuple[DualClass, ...]] = [()]
    for _ in range(r):
        nxt, verts = next_decgd_row(rows[-1])
        rows.append(nxt)
        verticals.append(verts)
    if rows[r] != rows[0]:
        raise GrowthError("decgd rows are not periodic")
    # vertical labels below row 0 are those computed when producing row r
    verticals[0] = verticals[r]
    g = Decgd(rect, tuple(rows[:r]), tuple(verticals[:r]))
    check_decgd(g)
    return g


def check_decgd(g: Decgd) -> None:
    r, rect = g.r, g.rect
    rot = {}

    def R(d: DualClass) -> DualClass:
        if d not in rot:
            rot[d] = rotate_class(d, rect)
        return rot[d]

    for d in range(r):
        for p in range(r + 1):
            i, j = p + d, -d
            lam = g.vertex(i, j)
            if g.vertex(i + r, j - r) != lam:
                raise GrowthError(f"vertex periodicity fails at {(i, j)}")
            if g.vertex(r - j, -i) != complement(lam, rect):
                raise GrowthError(f"vertex complement symmetry fails at {(i, j)}")
            if p < r:
                if g.horizontal(i + r, j - r) != g.horizontal(i, j):
                    raise GrowthError(f"edge periodicity fails at {(i, j)}")
                if g.horizontal(r - 1 - j, -i) != R(g.vertical(i, j)):
                    raise GrowthError(f"H/V rotation symmetry fails at {(i, j)}")
                if g.vertical(r - j, -i - 1) != R(g.horizontal(i, j)):
                    raise GrowthError(f"V/H rotation symmetry fails at {(i, j)}")
