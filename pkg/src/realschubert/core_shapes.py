"""Partitions, rectangles and skew shapes.

A partition is a plain tuple of positive integers in weakly decreasing order
(trailing zeros are stripped, so structural equality is partition equality).
Boxes are addressed as 1-based ``(row, col)`` pairs, English convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
Box = tuple[int, int]

EMPTY: Partition = ()
BOX: Partition = (1,)


class ShapeError(ValueError):
    """Raised for malformed partitions or shapes that violate a precondition."""


def partition(parts: Iterable[int]) -> Partition:
    """Normalize ``parts`` into a partition, rejecting increasing or negative parts."""
    p = list(parts)
    for a, b in zip(p, p[1:]):
        if b > a:
            raise ShapeError(f"parts must be weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ShapeError(f"parts must be nonnegative: {p}")
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """0-based part lookup with implicit zero padding."""
    return lam[i] if i < len(lam) else 0


@dataclass(frozen=True)
class Rectangle:
    """The ``rows x cols`` box, i.e. the ambient shape for G(rows, rows + cols)."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeError(f"rectangle sides must be positive: {self.rows}x{self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> Partition:
        return (self.cols,) * self.rows

    @property
    def n(self) -> int:
        return self.rows + self.cols

    def fits(self, lam: Partition) -> bool:
        return len(lam) <= self.rows and part(lam, 0) <= self.cols

    def __str__(self):
        return f"{self.rows}x{self.cols}"

    @classmethod
    def parse(cls, text: str) -> "Rectangle":
        try:
            k, m = text.lower().split("x")
            return cls(int(k), int(m))
        except ValueError as exc:
            raise ShapeError(f"rectangle must look like KxM, got {text!r}") from exc

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols}

    @classmethod
    def from_json(cls, obj: dict) -> "Rectangle":
        return cls(int(obj["rows"]), int(obj["cols"]))


@dataclass(frozen=True)
class SkewShape:
    inner: Partition
    outer: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ShapeError(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return size(self.outer) - size(self.inner)

    def boxes(self) -> list[Box]:
        return skew_boxes(self.inner, self.outer)

    def __str__(self):
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"

    def to_json(self) -> dict:
        return {"inner": list(self.inner), "outer": list(self.outer)}

    @classmethod
    def from_json(cls, obj: dict) -> "SkewShape":
        return cls(partition(obj["inner"]), partition(obj["outer"]))


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff ``lam`` fits inside ``mu`` part by part."""
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


def complement(lam: Partition, rect: Rectangle) -> Partition:
    """The 180-degree rotated complement of ``lam`` inside ``rect``."""
    if not rect.fits(lam):
        raise ShapeError(f"{lam} does not fit in {rect}")
    return partition(rect.cols - part(lam, rect.rows - 1 - i) for i in range(rect.rows))


def one_box_extensions(lam: Partition, bound: Partition) -> list[Partition]:
    """Partitions obtained by adding one box to ``lam`` while staying inside ``bound``.

    Ordered by the row of the added box, top row first.
    """
    out = []
    for r in range(len(lam) + 1):
        cur = part(lam, r)
        if r > 0 and lam[r - 1] <= cur:
            continue
        if cur + 1 > part(bound, r):
            continue
        out.append(lam[:r] + (cur + 1,) + lam[r + 1:])
    return out


def one_box_removals(lam: Partition) -> list[Partition]:
    out = []
    for r in range(len(lam)):
        if r + 1 < len(lam) and lam[r + 1] == lam[r]:
            continue
        out.append(partition(lam[:r] + (lam[r] - 1,) + lam[r + 1:]))
    return out


def added_box(small: Partition, big: Partition) -> Box:
    """The unique box of ``big / small`` when they differ by exactly one box."""
    diff = [r for r in range(len(big)) if part(small, r) != big[r]]
    if len(diff) != 1 or big[diff[0]] != part(small, diff[0]) + 1 or len(small) > len(big):
        raise ShapeError(f"{big} is not a one-box extension of {small}")
    r = diff[0]
    return (r + 1, big[r])


def add_box(lam: Partition, box: Box) -> Partition:
    r, c = box
    if part(lam, r - 1) != c - 1 or (r > 1 and lam[r - 2] < c):
        raise ShapeError(f"box {box} is not addable to {lam}")
    parts = list(lam) + [0] * (r - len(lam))
    parts[r - 1] += 1
    return partition(parts)


def skew_boxes(inner: Partition, outer: Partition) -> list[Box]:
    """Boxes of ``outer / inner`` in row-major order."""
    return [
        (r + 1, c + 1)
        for r in range(len(outer))
        for c in range(part(inner, r), outer[r])
    ]


def intermediates(low: Partition, high: Partition) -> list[Partition]:
    """All partitions strictly between ``low`` and ``high`` when they differ by two boxes."""
    return [mu for mu in one_box_extensions(low, high) if mu != high]


def adjacent(a: Box, b: Box) -> bool:
    return abs(a[0] - b[0]) + abs(a[1] - b[1]) == 1


def is_horizontal_strip(inner: Partition, outer: Partition) -> bool:
    """No two boxes of ``outer / inner`` share a column."""
    return contains(outer, inner) and all(
        part(outer, r + 1) <= part(inner, r) for r in range(len(outer))
    )


def is_vertical_strip(inner: Partition, outer: Partition) -> bool:
    return is_horizontal_strip(conjugate(inner), conjugate(outer))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def is_rectangular(lam: Partition) -> bool:
    return len(set(lam)) <= 1


def horizontal_strips(lam: Partition, length: int, bound: Partition) -> Iterator[Partition]:
    """Partitions ``mu`` inside ``bound`` with ``mu / lam`` a horizontal strip of ``length`` boxes."""
    rows = max(len(bound), len(lam) + 1)

    def rec(r: int, left: int, acc: list[int]):
        if r == rows:
            if left == 0:
                yield partition(acc)
            return
        cur = part(lam, r)
        cap = part(bound, r)
        if r > 0:
            cap = min(cap, part(lam, r - 1))
        for extra in range(min(left, max(cap - cur, 0)), -1, -1):
            yield from rec(r + 1, left - extra, acc + [cur + extra])

    yield from rec(0, length, [])


def enumerate_partitions(rect: Rectangle) -> list[Partition]:
    """All partitions in ``rect``, sorted by size and then lexicographically."""
    out = []

    def rec(prefix: tuple[int, ...], cap: int):
        out.append(partition(prefix))
        if len(prefix) == rect.rows:
            return
        for p in range(1, cap + 1):
            rec(prefix + (p,), p)

    rec((), rect.cols)
    return sorted(set(out), key=lambda p: (size(p), p))


def subsets(n: int, k: int) -> list[tuple[int, ...]]:
    """k-subsets of {1..n} in lexicographic order."""
    return list(combinations(range(1, n + 1), k))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "()"


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"`` (empty string or ``"()"`` for the empty partition)."""
    text = text.strip()
    if text in ("", "()", "0"):
        return EMPTY
    try:
        return partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ShapeError(f"cannot parse partition {text!r}") from exc


def parse_partitions(text: str) -> tuple[Partition, ...]:
    """Parse a semicolon-separated list such as ``"2;2,1;3,1"``."""
    if not text.strip():
        return ()
    return tuple(parse_partition(t) for t in text.split(";"))


def from_json(obj: Sequence[int]) -> Partition:
    return partition(int(x) for x in obj)
