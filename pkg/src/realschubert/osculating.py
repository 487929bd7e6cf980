"""Exact checks on osculating-flag minors and the single-box Schubert condition polynomial."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import comb, prod
from typing import Mapping, Sequence

from .core_shapes import Partition, Rectangle, enumerate_partitions, part

Scalar = Fraction
Matrix = list[list[Fraction]]
Subset = tuple[int, ...]


def falling(x: int, i: int) -> int:
    """``x (x-1) ... (x-i+1)``."""
    return prod(range(x - i + 1, x + 1)) if i <= x else 0


def osculating_matrix(n: int, z) -> Matrix:
    """Row ``i`` holds the ``i``-th derivatives of ``1, z, ..., z^(n-1)`` at ``z``."""
    z = Fraction(z)
    return [[Fraction(falling(j, i)) * z ** (j - i) if j >= i else Fraction(0) for j in range(n)]
            for i in range(n)]


def det(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    sign, result = 1, Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            sign = -sign
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return sign * result


def delta_and_e(J: Sequence[int], n: int) -> tuple[int, int]:
    """``(prod_{j1<j2} (j2 - j1), sum(J) - binom(|J|+1, 2))`` for ``J`` inside ``1..n``."""
    J = sorted(J)
    if not J or J[0] < 1 or J[-1] > n or len(set(J)) != len(J):
        raise ValueError(f"{J} is not a nonempty subset of 1..{n}")
    delta = prod(b - a for a, b in combinations(J, 2))
    e = sum(J) - comb(len(J) + 1, 2)
    return delta, e


def complement_subset(J: Sequence[int], n: int) -> Subset:
    s = set(J)
    return tuple(j for j in range(1, n + 1) if j not in s)


def top_minor(n: int, z, J: Sequence[int]) -> Fraction:
    """Determinant of the top ``|J|`` rows of the osculating matrix on columns ``J``."""
    m = osculating_matrix(n, z)
    return det([[m[i][j - 1] for j in J] for i in range(len(J))])


def verify_minor_identity(J: Sequence[int], n: int, z) -> bool:
    delta, e = delta_and_e(J, n)
    return top_minor(n, z, J) == delta * Fraction(z) ** e


def plucker_coordinates(rows: Sequence[Sequence]) -> dict[Subset, Fraction]:
    """All maximal minors of a ``k x n`` matrix, keyed by 1-based column subsets."""
    k, n = len(rows), len(rows[0])
    return {
        I: det([[row[j - 1] for j in I] for row in rows])
        for I in combinations(range(1, n + 1), k)
    }


def box_condition_poly(pl: Mapping[Subset, Fraction], n: int, k: int) -> list[Fraction]:
    """Coefficients (constant term first) of ``sum_I pl_I Delta_{I^c} (-z)^{e_{I^c}}``."""
    deg = k * (n - k)
    coeffs = [Fraction(0)] * (deg + 1)
    for I, v in pl.items():
        if len(I) != k:
            raise ValueError(f"subset {I} does not have size {k}")
        if not v:
            continue
        Ic = complement_subset(I, n)
        delta, e = delta_and_e(Ic, n) if Ic else (1, 0)
        coeffs[e] += v * delta * (-1) ** e
    return coeffs


def poly_degree(coeffs: Sequence[Fraction]) -> int:
    """Degree of a coefficient list, ``-1`` for the zero polynomial."""
    for d in range(len(coeffs) - 1, -1, -1):
        if coeffs[d]:
            return d
    return -1


def z_adic_order(coeffs: Sequence[Fraction]) -> int:
    """Largest ``m`` with ``z^m`` dividing the polynomial (its length for the zero polynomial)."""
    for d, c in enumerate(coeffs):
        if c:
            return d
    return len(coeffs)


def schubert_index(lam: Partition, rect: Rectangle) -> Subset:
    """``I(lam)``: the ``i``-th entry is ``n - k + i - lam_i``."""
    k, n = rect.rows, rect.n
    return tuple(n - k + i + 1 - part(lam, i) for i in range(k))


def coordinate_point(lam: Partition, rect: Rectangle) -> list[list[Fraction]]:
    """Row span of the standard basis vectors indexed by ``I(lam)``."""
    I = schubert_index(lam, rect)
    return [[Fraction(int(j == i)) for j in range(1, rect.n + 1)] for i in I]


def cell_point(lam: Partition, rect: Rectangle, rng: random.Random) -> list[list[Fraction]]:
    """A random point of the Schubert cell: pivot 1 at ``I(lam)_i``, random entries left of it."""
    I = schubert_index(lam, rect)
    rows = []
    for i in I:
        rows.append([Fraction(rng.randint(-9, 9), rng.randint(1, 5)) if j < i else Fraction(int(j == i))
                     for j in range(1, rect.n + 1)])
    return rows


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 20))


def osculating_check(n_max: int = 8, trials: int = 100, seed: int = 0) -> dict:
    """Minor identity for all subsets at ``trials`` random points; ``e`` complement identity up to ``n_max + 2``."""
    rng = random.Random(seed)
    checked = failures = 0
    zs = [random_rational(rng) for _ in range(trials)]
    for n in range(1, n_max + 1):
        for z in zs:
            m = osculating_matrix(n, z)
            for size in range(1, n + 1):
                for J in combinations(range(1, n + 1), size):
                    delta, e = delta_and_e(J, n)
                    minor = det([[m[i][j - 1] for j in J] for i in range(size)])
                    checked += 1
                    failures += minor != delta * z ** e
    for n in range(1, n_max + 3):
        for size in range(1, n):
            for J in combinations(range(1, n + 1), size):
                checked += 1
                failures += delta_and_e(J, n)[1] + delta_and_e(complement_subset(J, n), n)[1] != size * (n - size)
    return {"n": n_max, "trials": trials, "seed": seed, "checked": checked, "failures": failures}


def divisibility_check(rect: Rectangle, samples: int = 3, seed: int = 0) -> dict:
    """``z^{|lam|}`` divides ``f`` at coordinate points and random cell points of every ``lam``."""
    rng = random.Random(seed)
    checked = failures = 0
    for lam in enumerate_partitions(rect):
        points = [coordinate_point(lam, rect)] + [cell_point(lam, rect, rng) for _ in range(samples)]
        for pt in points:
            f = box_condition_poly(plucker_coordinates(pt), rect.n, rect.rows)
            checked += 1
            failures += z_adic_order(f) < sum(lam)
    return {"rect": str(rect), "checked": checked, "failures": failures}
