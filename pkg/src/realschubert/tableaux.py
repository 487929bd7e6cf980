"""Standard skew tableaux stored as partition chains, and increasing tableaux."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Mapping, Sequence

from .core_shapes import (
    Box,
    Partition,
    Rectangle,
    ShapeError,
    SkewShape,
    added_box,
    complement,
    contains,
    one_box_extensions,
    part,
    partition,
    skew_boxes,
)


@dataclass(frozen=True)
class StandardSkewTableau:
    """A standard filling of ``outer / inner``, held as the chain of shapes it grows through.

    ``chain[i]`` is the shape occupied by the inner shape together with entries
    ``1..i``; so ``chain[0]`` is the inner shape and ``chain[-1]`` the outer.
    """

    chain: tuple[Partition, ...]

    def __post_init__(self):
        if not self.chain:
            raise ShapeError("a tableau chain needs at least one shape")
        for a, b in zip(self.chain, self.chain[1:]):
            added_box(a, b)

    @property
    def inner(self) -> Partition:
        return self.chain[0]

    @property
    def outer(self) -> Partition:
        return self.chain[-1]

    @property
    def size(self) -> int:
        return len(self.chain) - 1

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.inner, self.outer)

    @cached_property
    def boxes(self) -> tuple[Box, ...]:
        """``boxes[i - 1]`` is the box holding entry ``i``."""
        return tuple(added_box(a, b) for a, b in zip(self.chain, self.chain[1:]))

    @cached_property
    def entries(self) -> dict[Box, int]:
        return {b: i + 1 for i, b in enumerate(self.boxes)}

    def rows(self) -> list[list[int]]:
        """Entries row by row, skipping the inner shape."""
        ent = self.entries
        return [
            [ent[(r + 1, c + 1)] for c in range(part(self.inner, r), self.outer[r])]
            for r in range(len(self.outer))
        ]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], inner: Partition = ()) -> "StandardSkewTableau":
        """Build from the entries of each row lying to the right of ``inner``."""
        inner = partition(inner)
        where = {}
        for r, row in enumerate(rows):
            for k, v in enumerate(row):
                where[v] = (r + 1, part(inner, r) + k + 1)
        n = len(where)
        if sorted(where) != list(range(1, n + 1)):
            raise ShapeError(f"entries must be 1..{n}")
        chain = [inner]
        for v in range(1, n + 1):
            r, c = where[v]
            cur = list(chain[-1]) + [0] * (r - len(chain[-1]))
            if cur[r - 1] != c - 1:
                raise ShapeError(f"entry {v} at {(r, c)} does not extend {chain[-1]}")
            cur[r - 1] += 1
            chain.append(partition(cur))
        return cls(tuple(chain))

    @classmethod
    def empty(cls, shape: Partition) -> "StandardSkewTableau":
        return cls((shape,))

    def __str__(self):
        ent = self.entries
        lines = []
        for r in range(len(self.outer)):
            cells = ["." if c < part(self.inner, r) else str(ent[(r + 1, c + 1)])
                     for c in range(self.outer[r])]
            lines.append(" ".join(cells))
        return "\n".join(lines) if lines else "(empty)"

    def to_json(self) -> dict:
        return {"chain": [list(p) for p in self.chain]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "StandardSkewTableau":
        return cls(tuple(partition(p) for p in obj["chain"]))


def concatenate(*tabs: StandardSkewTableau) -> StandardSkewTableau:
    """Join tableaux whose shapes extend one another into one chain."""
    chain = list(tabs[0].chain)
    for t in tabs[1:]:
        if t.inner != chain[-1]:
            raise ShapeError(f"cannot concatenate: {t.inner} != {chain[-1]}")
        chain.extend(t.chain[1:])
    return StandardSkewTableau(tuple(chain))


def split(t: StandardSkewTableau, sizes: Sequence[int]) -> list[StandardSkewTableau]:
    """Cut a chain into consecutive pieces of the given sizes."""
    if sum(sizes) != t.size:
        raise ShapeError(f"sizes {sizes} do not sum to {t.size}")
    out, pos = [], 0
    for s in sizes:
        out.append(StandardSkewTableau(t.chain[pos:pos + s + 1]))
        pos += s
    return out


@lru_cache(maxsize=None)
def _standard_chains(inner: Partition, outer: Partition) -> tuple[tuple[Partition, ...], ...]:
    if inner == outer:
        return ((inner,),)
    out = []
    for mu in one_box_extensions(inner, outer):
        for rest in _standard_chains(mu, outer):
            out.append((inner,) + rest)
    return tuple(sorted(out))


def enumerate_standard(shape: SkewShape) -> list[StandardSkewTableau]:
    """All standard tableaux of ``shape``, sorted lexicographically by chain."""
    return [StandardSkewTableau(c) for c in _standard_chains(shape.inner, shape.outer)]


def rotate180(t: StandardSkewTableau, rect: Rectangle) -> StandardSkewTableau:
    """Rotate by 180 degrees inside ``rect`` and reverse the numbering."""
    if not rect.fits(t.outer):
        raise ShapeError(f"{t.outer} does not fit in {rect}")
    return StandardSkewTableau(tuple(complement(p, rect) for p in reversed(t.chain)))


@lru_cache(maxsize=None)
def superstandard(lam: Partition) -> StandardSkewTableau:
    """Row-reading filling of a straight shape: first row 1..lam[0], and so on."""
    chain = [()]
    cur: list[int] = []
    for r, length in enumerate(lam):
        cur.append(0)
        for _ in range(length):
            cur[r] += 1
            chain.append(tuple(cur))
    return StandardSkewTableau(tuple(chain))


@dataclass(frozen=True)
class IncreasingTableau:
    """Filling of ``outer / inner`` strictly increasing along rows and columns; repeats allowed.

    ``rows[r]`` lists the entries of row ``r + 1`` that lie to the right of ``inner``.
    """

    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        outer = self.outer
        if not contains(outer, self.inner):
            raise ShapeError("inner shape sticks out of the filling")
        cells = self.cells
        for (r, c), v in cells.items():
            right, below = cells.get((r, c + 1)), cells.get((r + 1, c))
            if (right is not None and right <= v) or (below is not None and below <= v):
                raise ShapeError(f"not increasing at {(r, c)}: {self.rows}")
            if v < 1:
                raise ShapeError("entries must be positive")

    @property
    def outer(self) -> Partition:
        lens = [part(self.inner, r) + len(row) for r, row in enumerate(self.rows)]
        lens += list(self.inner[len(self.rows):])
        return partition(lens)

    @property
    def shape(self) -> SkewShape:
        return SkewShape(self.inner, self.outer)

    @cached_property
    def cells(self) -> dict[Box, int]:
        return {
            (r + 1, part(self.inner, r) + k + 1): v
            for r, row in enumerate(self.rows)
            for k, v in enumerate(row)
        }

    @classmethod
    def from_cells(cls, inner: Partition, cells: Mapping[Box, int]) -> "IncreasingTableau":
        inner = partition(inner)
        nrows = max([r for r, _ in cells] + [len(inner)], default=0)
        rows = []
        for r in range(1, nrows + 1):
            cols = sorted(c for (rr, c) in cells if rr == r)
            start = part(inner, r - 1)
            if cols != list(range(start + 1, start + 1 + len(cols))):
                raise ShapeError(f"row {r} is not contiguous after the inner shape")
            rows.append(tuple(cells[(r, c)] for c in cols))
        while rows and not rows[-1] and len(rows) > len(inner):
            rows.pop()
        return cls(inner, tuple(rows))

    @classmethod
    def from_standard(cls, t: StandardSkewTableau) -> "IncreasingTableau":
        return cls.from_cells(t.inner, t.entries)

    def to_standard(self) -> StandardSkewTableau:
        """Inverse of :meth:`from_standard`; requires entries exactly ``1..size``."""
        return StandardSkewTableau.from_rows(self.rows, self.inner)

    def values(self) -> list[int]:
        return sorted(self.cells.values())

    def __str__(self):
        lines = []
        outer = self.outer
        for r in range(len(outer)):
            cells = ["." if c < part(self.inner, r) else str(self.cells[(r + 1, c + 1)])
                     for c in range(outer[r])]
            lines.append(" ".join(cells))
        return "\n".join(lines) if lines else "(empty)"

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "IncreasingTableau":
        return cls(partition(obj["inner"]), tuple(tuple(int(v) for v in r) for r in obj["rows"]))


def skew_cells(shape: SkewShape) -> list[Box]:
    return skew_boxes(shape.inner, shape.outer)
