"""Littlewood-Richardson numbers, first-order K-theoretic coefficients and the parity identities."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .core_shapes import (
    BOX,
    Box,
    Partition,
    Rectangle,
    ShapeError,
    SkewShape,
    complement,
    contains,
    enumerate_partitions,
    is_horizontal_strip,
    one_box_extensions,
    part,
    partition,
    size,
    skew_boxes,
)
from .dual_equiv import DEChain, enumerate_chains
from .growth_engine import bender_knuth, promotion
from .monodromy import Esh, MonodromyWord, OrbitReport, Sh, orbits, sign_of
from .tableaux import IncreasingTableau, enumerate_standard


# ---------------------------------------------------------------- cohomology

def lr_coeff(inner: Partition, types: Sequence[Partition], outer: Partition) -> int:
    """The number of chains of dual equivalence classes ``inner -> outer`` of the given type."""
    return len(enumerate_chains(partition(inner), partition(outer), types))


def lr_oracle(inner: Partition, lam: Partition, outer: Partition) -> int:
    """Count semistandard fillings of ``outer / inner`` with content ``lam`` and lattice reverse reading word.

    Written independently of the tableau-shuffling code so the two can be compared.
    """
    inner, lam, outer = partition(inner), partition(lam), partition(outer)
    if not contains(outer, inner) or size(outer) - size(inner) != size(lam):
        return 0
    # reverse reading order: rows top to bottom, each row right to left
    cells = [(r, c) for r in range(1, len(outer) + 1)
             for c in range(outer[r - 1], part(inner, r - 1), -1)]
    filling: dict[Box, int] = {}
    counts = [0] * (len(lam) + 1)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        right = filling.get((r, c + 1))
        above = filling.get((r - 1, c))
        total = 0
        for v in range(1, len(lam) + 1):
            if counts[v] >= lam[v - 1]:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            filling[(r, c)] = v
            counts[v] += 1
            total += rec(k + 1)
            counts[v] -= 1
            del filling[(r, c)]
        return total

    return rec(0)


# ---------------------------------------------------------------- K-theoretic jeu de taquin

_HOLE = "hole"


def inner_corners(inner: Partition) -> list[Box]:
    """Removable boxes of ``inner`` in row-major order."""
    return [(r + 1, inner[r]) for r in range(len(inner))
            if r + 1 == len(inner) or inner[r + 1] < inner[r]]


def kjdt_slide(t: IncreasingTableau, corners: Iterable[Box]) -> IncreasingTableau:
    """One K-theoretic slide into the given inner corners, by the switching rule."""
    corners = set(corners)
    if not corners:
        raise ShapeError("a slide needs at least one corner")
    valid = set(inner_corners(t.inner))
    if not corners <= valid:
        raise ShapeError(f"{sorted(corners - valid)} are not inner corners of {t.inner}")
    grid: dict[Box, object] = dict(t.cells)
    for b in corners:
        grid[b] = _HOLE
    for s in sorted(set(t.cells.values())):
        fill = [b for b, v in grid.items() if v == _HOLE
                and (grid.get((b[0], b[1] + 1)) == s or grid.get((b[0] + 1, b[1])) == s)]
        vacate = [b for b, v in grid.items() if v == s
                  and (grid.get((b[0], b[1] - 1)) == _HOLE or grid.get((b[0] - 1, b[1])) == _HOLE)]
        for b in fill:
            grid[b] = s
        for b in vacate:
            grid[b] = _HOLE
    cells = {b: v for b, v in grid.items() if v != _HOLE}
    new_inner = list(t.inner)
    for r, _ in corners:
        new_inner[r - 1] -= 1
    return IncreasingTableau.from_cells(partition(new_inner), cells)


def k_rectify(t: IncreasingTableau) -> IncreasingTableau:
    """Slide into the last inner corner (row-major) until the shape is straight."""
    while t.inner:
        t = kjdt_slide(t, [inner_corners(t.inner)[-1]])
    return t


def superstandard_increasing(lam: Partition) -> IncreasingTableau:
    rows, v = [], 1
    for length in lam:
        rows.append(tuple(range(v, v + length)))
        v += length
    return IncreasingTableau((), tuple(rows))


def increasing_tableaux(shape: SkewShape, n_values: int, max_repeats: int | None = None) -> Iterator[IncreasingTableau]:
    """Increasing fillings of ``shape`` using each of ``1..n_values`` at least once.

    Boxes holding the values ``<= v`` always form a partition, so the fillings are
    grown value by value, each value occupying a nonempty set of addable boxes.
    ``max_repeats`` caps the number of values used more than once.
    """
    inner, outer = shape.inner, shape.outer
    total = shape.size

    def addable(lam: Partition) -> list[Box]:
        return [_new_box(lam, mu) for mu in one_box_extensions(lam, outer)]

    def rec(v: int, lam: Partition, placed: int, repeats: int, cells: dict):
        if v > n_values:
            if placed == total:
                yield IncreasingTableau.from_cells(inner, cells)
            return
        remaining_values = n_values - v + 1
        if total - placed < remaining_values:
            return
        opts = addable(lam)
        max_k = total - placed - (remaining_values - 1)
        for k in range(1, min(len(opts), max_k) + 1):
            if k > 1 and max_repeats is not None and repeats + 1 > max_repeats:
                break
            for combo in combinations(opts, k):
                new = lam
                for b in combo:
                    new = _add(new, b)
                for b in combo:
                    cells[b] = v
                yield from rec(v + 1, new, placed + k, repeats + (k > 1), cells)
                for b in combo:
                    del cells[b]

    yield from rec(1, inner, 0, 0, {})


def _new_box(lam: Partition, mu: Partition) -> Box:
    for r in range(len(mu)):
        if part(lam, r) != mu[r]:
            return (r + 1, mu[r])
    raise ShapeError("no new box")


def _add(lam: Partition, b: Box) -> Partition:
    parts = list(lam) + [0] * (b[0] - len(lam))
    parts[b[0] - 1] += 1
    return partition(parts)


def _first_order_precondition(alpha, beta, gamma, rect):
    if size(alpha) + size(beta) + size(gamma) != rect.area - 1:
        raise ShapeError(
            f"|alpha|+|beta|+|gamma| = {size(alpha) + size(beta) + size(gamma)}, need {rect.area - 1}")
    for lam in (alpha, beta, gamma):
        if not rect.fits(lam):
            raise ShapeError(f"{lam} does not fit in {rect}")


def k_tableaux(alpha: Partition, beta: Partition, gamma: Partition, rect: Rectangle) -> list[IncreasingTableau]:
    """Increasing tableaux of shape ``gamma^c / alpha`` with one repeated value that K-rectify to ``beta``'s superstandard tableau."""
    alpha, beta, gamma = partition(alpha), partition(beta), partition(gamma)
    _first_order_precondition(alpha, beta, gamma, rect)
    gc = complement(gamma, rect)
    if not contains(gc, alpha):
        return []
    target = superstandard_increasing(beta)
    return [
        t for t in increasing_tableaux(SkewShape(alpha, gc), size(beta), max_repeats=1)
        if k_rectify(t) == target
    ]


def k_coeff(alpha: Partition, beta: Partition, gamma: Partition, rect: Rectangle) -> int:
    """First-order K-theoretic coefficient ``k_{alpha beta}^{gamma^c}``."""
    return len(k_tableaux(alpha, beta, gamma, rect))


def strip_rows(alpha: Partition, gamma: Partition, rect: Rectangle) -> list[int]:
    """Row indices (1-based, top first) of the nonempty rows of ``gamma^c / alpha``."""
    gc = complement(partition(gamma), rect)
    return [r + 1 for r in range(len(gc)) if gc[r] > part(alpha, r)]


def k_coeff_pieri(alpha: Partition, strip_len: int, gamma: Partition, rect: Rectangle) -> int:
    """Closed form ``r - 1`` for a horizontal strip ``gamma^c / alpha`` of ``strip_len + 1`` boxes."""
    alpha, gamma = partition(alpha), partition(gamma)
    gc = complement(gamma, rect)
    if not contains(gc, alpha) or not is_horizontal_strip(alpha, gc):
        raise ShapeError(f"{gc}/{alpha} is not a horizontal strip")
    if size(gc) - size(alpha) != strip_len + 1:
        raise ShapeError(f"strip has {size(gc) - size(alpha)} boxes, expected {strip_len + 1}")
    return len(strip_rows(alpha, gamma, rect)) - 1


def k_promotion_count(rect: Rectangle) -> int:
    """Increasing fillings of the rectangle by ``1..area-1`` with every value used."""
    shape = SkewShape((), rect.full)
    return sum(1 for _ in increasing_tableaux(shape, rect.area - 1, max_repeats=1))


def bk_swap_pair_counts(rect: Rectangle) -> list[int]:
    """``|Y_i|`` for each ``i``: unordered pairs of tableaux of the rectangle exchanged by the i-th Bender-Knuth move."""
    syt = enumerate_standard(SkewShape((), rect.full))
    return [sum(1 for t in syt if bender_knuth(t, i) != t) // 2 for i in range(1, rect.area)]


def promotion_sign(rect: Rectangle) -> int:
    """Sign (0/1) of promotion as a permutation of the standard tableaux of the rectangle."""
    syt = enumerate_standard(SkewShape((), rect.full))
    index = {t: k for k, t in enumerate(syt)}
    perm = [index[promotion(t)] for t in syt]
    return sign_of(perm)


# ---------------------------------------------------------------- parity identities

PARITY_WORD = MonodromyWord((Sh(2), Esh(2)), 2)


@dataclass(frozen=True)
class ParityReport:
    alpha: Partition
    beta: Partition
    gamma: Partition
    rect: Rectangle
    c: int
    k: int
    orbit_count: int
    sign: int
    is_identity: bool
    orbit_sizes: tuple[int, ...] = field(default=())

    @property
    def chi(self) -> int:
        return self.c - self.k

    @property
    def congruence_ok(self) -> bool:
        return (self.orbit_count - self.c + self.k) % 2 == 0 and (self.sign - self.k) % 2 == 0

    @property
    def inequality_ok(self) -> bool:
        return self.c <= self.k + self.orbit_count

    @property
    def ok(self) -> bool:
        return self.congruence_ok and self.inequality_ok

    @property
    def integer_identity(self) -> bool:
        """Whether the orbit count equals ``c - k`` on the nose (not part of any contract)."""
        return self.orbit_count == self.c - self.k

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha), "beta": list(self.beta), "gamma": list(self.gamma),
            "rect": self.rect.to_json(),
            "c": self.c, "k": self.k, "eta": self.orbit_count, "sign": self.sign,
            "chi": self.chi, "ok": self.ok,
        }


def parity_chain_set(alpha, beta, gamma, rect: Rectangle) -> list[DEChain]:
    return enumerate_chains((), rect.full, (partition(alpha), BOX, partition(beta), partition(gamma)))


def parity_orbits(alpha, beta, gamma, rect: Rectangle) -> OrbitReport:
    """Orbits of ``esh_2 sh_2`` on the chains of type ``(alpha, box, beta, gamma)``."""
    return orbits(PARITY_WORD, parity_chain_set(alpha, beta, gamma, rect))


def parity_check(alpha, beta, gamma, rect: Rectangle) -> ParityReport:
    alpha, beta, gamma = partition(alpha), partition(beta), partition(gamma)
    _first_order_precondition(alpha, beta, gamma, rect)
    rep = parity_orbits(alpha, beta, gamma, rect)
    k = k_coeff(alpha, beta, gamma, rect)
    return ParityReport(alpha, beta, gamma, rect, rep.set_size, k, rep.eta, rep.sign,
                        rep.is_identity, tuple(rep.orbit_sizes))


def first_order_triples(rect: Rectangle) -> list[tuple[Partition, Partition, Partition]]:
    """All ``(alpha, beta, gamma)`` in ``rect`` with total size ``area - 1``, in a fixed order."""
    parts = enumerate_partitions(rect)
    target = rect.area - 1
    return [(a, b, g) for a in parts for b in parts for g in parts
            if size(a) + size(b) + size(g) == target]


def _parity_task(args):
    a, b, g, rows, cols = args
    return parity_check(a, b, g, Rectangle(rows, cols))


def parity_scan(rect: Rectangle, jobs: int = 1) -> list[ParityReport]:
    """Parity reports for every first-order triple in ``rect``."""
    tasks = [(a, b, g, rect.rows, rect.cols) for a, b, g in first_order_triples(rect)]
    if jobs == 1:
        return [_parity_task(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_parity_task, tasks, chunksize=16))


# ---------------------------------------------------------------- Pieri case

def pieri_instances(rect: Rectangle) -> list[tuple[Partition, Partition, Partition]]:
    """Triples with ``beta`` a single row and ``gamma^c / alpha`` a horizontal strip of ``|beta| + 1`` boxes."""
    out = []
    for a, b, g in first_order_triples(rect):
        if len(b) != 1:
            continue
        gc = complement(g, rect)
        if contains(gc, a) and is_horizontal_strip(a, gc):
            out.append((a, b, g))
    return out


def pieri_ordered_chains(alpha, beta, gamma, rect: Rectangle) -> list[DEChain]:
    """The chains ``D_1, ..., D_r``: ``D_i`` has the box at the start of the i-th lowest row of the strip."""
    alpha = partition(alpha)
    chains = parity_chain_set(alpha, beta, gamma, rect)
    rows = strip_rows(alpha, gamma, rect)
    by_row = {}
    for c in chains:
        box_shape = c.classes[1].outer
        r = next(i + 1 for i in range(len(box_shape)) if box_shape[i] != part(alpha, i))
        by_row[r] = c
    if sorted(by_row) != sorted(rows) or len(chains) != len(rows):
        raise RuntimeError(f"chains do not match strip rows {rows}")
    return [by_row[r] for r in reversed(rows)]


def pieri_permutation(alpha, beta, gamma, rect: Rectangle) -> list[int]:
    """``omega`` on ``D_1..D_r`` as a list: entry ``i`` is the index of ``omega(D_i)`` (0-based)."""
    ordered = pieri_ordered_chains(alpha, beta, gamma, rect)
    index = {c: i for i, c in enumerate(ordered)}
    return [index[PARITY_WORD.apply(c)] for c in ordered]
