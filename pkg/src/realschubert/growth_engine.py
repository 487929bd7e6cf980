"""Fomin growth diagrams: shuffling, rectification, Bender-Knuth moves and cylindrical diagrams.

Growth diagrams use Cartesian coordinates: ``(i, j)`` is ``i`` steps right and
``j`` steps up, and every edge points up or right.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .core_shapes import (
    Partition,
    Rectangle,
    ShapeError,
    added_box,
    adjacent,
    complement,
    format_partition,
    intermediates,
)
from .tableaux import StandardSkewTableau, superstandard


class GrowthError(ShapeError):
    """A diagram violated the growth or recurrence condition."""


@lru_cache(maxsize=None)
def growth_square(gamma: Partition, alpha: Partition, beta: Partition) -> Partition:
    """Complete the square ``gamma -> alpha -> beta`` with its lower-right corner.

    ``alpha`` sits above ``gamma`` and ``beta`` to the right of ``alpha``. When the
    two boxes of ``beta / gamma`` are not adjacent the result is the other
    intermediate partition; for a domino it is ``alpha`` itself.
    """
    try:
        b1 = added_box(gamma, alpha)
        b2 = added_box(alpha, beta)
    except ShapeError as exc:
        raise GrowthError(f"malformed square {gamma} -> {alpha} -> {beta}") from exc
    if adjacent(b1, b2):
        return alpha
    mids = intermediates(gamma, beta)
    (other,) = [m for m in mids if m != alpha]
    return other


def check_square(gamma: Partition, alpha: Partition, beta: Partition, delta: Partition) -> bool:
    """Local rule: ``alpha`` and ``delta`` are distinct intermediates unless ``beta / gamma`` is a domino."""
    mids = intermediates(gamma, beta)
    if alpha not in mids or delta not in mids:
        return False
    if len(mids) == 1:
        return alpha == delta
    return alpha != delta


def growth_diagram(
    left: Sequence[Partition],
    top: Sequence[Partition],
    order: Literal["row", "column"] = "row",
) -> dict[tuple[int, int], Partition]:
    """Fill the rectangle whose left column (bottom to top) and top row (left to right) are given.

    ``left[-1]`` must equal ``top[0]``: they share the top-left corner.
    """
    if left[-1] != top[0]:
        raise GrowthError(f"left edge ends at {left[-1]} but top edge starts at {top[0]}")
    n, m = len(left) - 1, len(top) - 1
    lam: dict[tuple[int, int], Partition] = {}
    for j, p in enumerate(left):
        lam[(0, j)] = p
    for i, p in enumerate(top):
        lam[(i, n)] = p

    def fill(i: int, j: int):
        lam[(i, j)] = growth_square(lam[(i - 1, j)], lam[(i - 1, j + 1)], lam[(i, j + 1)])

    if order == "row":
        for j in range(n - 1, -1, -1):
            for i in range(1, m + 1):
                fill(i, j)
    else:
        for i in range(1, m + 1):
            for j in range(n - 1, -1, -1):
                fill(i, j)
    return lam


@lru_cache(maxsize=None)
def _shuffle_chains(s: tuple[Partition, ...], t: tuple[Partition, ...]):
    n, m = len(s) - 1, len(t) - 1
    lam = growth_diagram(s, t)
    bottom = tuple(lam[(i, 0)] for i in range(m + 1))
    right = tuple(lam[(m, j)] for j in range(n + 1))
    return bottom, right


def shuffle_tableaux(
    s: StandardSkewTableau, t: StandardSkewTableau
) -> tuple[StandardSkewTableau, StandardSkewTableau]:
    """Shuffle ``(s, t)`` to ``(t~, s~)`` where ``t``'s shape extends ``s``'s.

    ``t~`` is ``t`` slid inwards through ``s``, starting at ``s.inner``; ``s~`` is
    ``s`` slid outwards and ends at ``t.outer``.
    """
    if t.inner != s.outer:
        raise GrowthError(f"shape of t ({t.inner} inner) does not extend s (outer {s.outer})")
    bottom, right = _shuffle_chains(s.chain, t.chain)
    return StandardSkewTableau(bottom), StandardSkewTableau(right)


def rectify(t: StandardSkewTableau) -> tuple[StandardSkewTableau, StandardSkewTableau]:
    """Rectify ``t`` using the superstandard tableau of its inner shape.

    Returns ``(rectified, recording)``: the straight-shape rectification and the
    helper tableau after being slid out to ``t.outer``.
    """
    return shuffle_tableaux(superstandard(t.inner), t)


def rectification_shape(t: StandardSkewTableau) -> Partition:
    return rectify(t)[0].outer


def bender_knuth(t: StandardSkewTableau, i: int) -> StandardSkewTableau:
    """Swap entries ``i`` and ``i + 1`` unless their boxes are adjacent."""
    if not 1 <= i < t.size:
        raise IndexError(f"Bender-Knuth index {i} out of range for size {t.size}")
    chain = list(t.chain)
    chain[i] = growth_square(chain[i - 1], chain[i], chain[i + 1])
    return StandardSkewTableau(tuple(chain))


def promotion(t: StandardSkewTableau) -> StandardSkewTableau:
    """Apply Bender-Knuth moves 1, 2, ..., size-1 in that order."""
    if t.inner != ():
        raise ShapeError("promotion is defined here for straight shapes")
    for i in range(1, t.size):
        t = bender_knuth(t, i)
    return t


def promotion_inverse(t: StandardSkewTableau) -> StandardSkewTableau:
    for i in range(t.size - 1, 0, -1):
        t = bender_knuth(t, i)
    return t


@dataclass(frozen=True)
class CylindricalGrowthDiagram:
    """One period of a cylindrical growth diagram.

    ``rows[d][p]`` is the vertex ``(i, j) = (p + d, -d)``; row ``d`` runs from
    the empty partition (``p = 0``) to the rectangle (``p = r``).
    """

    rect: Rectangle
    rows: tuple[tuple[Partition, ...], ...]

    @property
    def r(self) -> int:
        return len(self.rows[0]) - 1

    def vertex(self, i: int, j: int) -> Partition:
        p = i + j
        if not 0 <= p <= self.r:
            raise IndexError(f"({i}, {j}) lies outside the diagonal strip")
        return self.rows[(-j) % self.r][p]

    def render(self) -> str:
        width = max(len(format_partition(p)) for row in self.rows for p in row) + 1
        lines = []
        for d, row in enumerate(self.rows):
            cells = [format_partition(p).rjust(width) for p in row]
            lines.append(" " * (width * d) + "".join(cells))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "rect": self.rect.to_json(),
            "vertices": [
                {"i": p + d, "j": -d, "partition": list(lam)}
                for d, row in enumerate(self.rows)
                for p, lam in enumerate(row)
            ],
        }


def next_cylinder_row(row: Sequence[Partition], rect: Rectangle) -> tuple[Partition, ...]:
    """The row one step below ``row`` in a cylindrical growth diagram."""
    r = len(row) - 1
    new = [()]
    for p in range(1, r):
        new.append(growth_square(new[p - 1], row[p], row[p + 1]))
    new.append(rect.full)
    return tuple(new)


def cylindrical_growth(first_row: StandardSkewTableau, rect: Rectangle) -> CylindricalGrowthDiagram:
    """Complete a cylindrical growth diagram from a chain running from empty to ``rect``.

    Both the period-``r`` shift symmetry and the rotation-complement symmetry are
    checked; a violation raises :class:`GrowthError`.
    """
    if first_row.inner != () or first_row.outer != rect.full:
        raise GrowthError(f"first row must run from () to {rect.full}")
    r = first_row.size
    rows = [tuple(first_row.chain)]
    for _ in range(r):
        rows.append(next_cylinder_row(rows[-1], rect))
    if rows[r] != rows[0]:
        raise GrowthError("cylindrical diagram is not periodic")
    diagram = CylindricalGrowthDiagram(rect, tuple(rows[:r]) if r else (rows[0],))
    if r:
        check_cylinder_symmetries(diagram)
    return diagram


def check_cylinder_symmetries(g: CylindricalGrowthDiagram) -> None:
    r = g.r
    for d in range(2 * r):
        for p in range(r + 1):
            i, j = p + d, -d
            here = g.vertex(i, j)
            if g.vertex(i + r, j - r) != here:
                raise GrowthError(f"shift symmetry fails at {(i, j)}")
            if g.vertex(r - j, -i) != complement(here, g.rect):
                raise GrowthError(f"complement symmetry fails at {(i, j)}")
    # recurrence on every square of one period
    for d in range(r):
        upper, lower = g.rows[d], g.rows[(d + 1) % r]
        for p in range(1, r):
            if not check_square(lower[p - 1], upper[p], upper[p + 1], lower[p]):
                raise GrowthError(f"local rule fails at depth {d}, position {p}")


def render_growth(lam: dict[tuple[int, int], Partition]) -> str:
    """Text grid of a rectangular diagram, top row first."""
    xs = sorted({i for i, _ in lam})
    ys = sorted({j for _, j in lam}, reverse=True)
    width = max(len(format_partition(p)) for p in lam.values()) + 1
    return "\n".join(
        "".join(format_partition(lam[(i, j)]).rjust(width) for i in xs) for j in ys
    )
