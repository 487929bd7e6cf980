"""Named worked instances with their expected numbers, each checkable in one call."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .core_shapes import Rectangle, SkewShape, complement
from .growth_engine import promotion
from .ktheory import (
    k_promotion_count,
    k_tableaux,
    parity_check,
    pieri_ordered_chains,
    pieri_permutation,
    promotion_sign,
)
from .monodromy import omega_word, reorder, word_orbits
from .tableaux import enumerate_standard


@dataclass
class CheckResult:
    name: str
    checks: list[tuple[str, object, object]] = field(default_factory=list)

    def expect(self, label: str, got, want):
        self.checks.append((label, got, want))

    @property
    def ok(self) -> bool:
        return all(got == want for _, got, want in self.checks)

    def to_json(self) -> dict:
        return {
            "example": self.name,
            "ok": self.ok,
            "checks": [{"check": label, "got": _plain(got), "expected": _plain(want), "ok": got == want}
                       for label, got, want in self.checks],
        }


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, list):
        return [_plain(y) for y in x]
    return x


G38_TYPES = ((2,), (2, 1), (3, 1), (3, 2))
G37_TYPES = ((2,), (2,), (2, 1), (3, 1))


def _g38() -> CheckResult:
    res = CheckResult("g38")
    rect = Rectangle(3, 5)
    for ordering, want in (("1234", 3), ("1243", 1), ("1324", 1)):
        rep = word_orbits(reorder(G38_TYPES, ordering), rect, omega_word("standard_cor47", 4))
        res.expect(f"eta[{ordering}]", rep.eta, want)
    return res


def _g37() -> CheckResult:
    res = CheckResult("g37")
    rect = Rectangle(3, 4)
    for ordering, want in (("1234", [3, 5]), ("1324", [4, 4])):
        rep = word_orbits(reorder(G37_TYPES, ordering), rect, omega_word("standard_cor47", 4))
        res.expect(f"set_size[{ordering}]", rep.set_size, 8)
        res.expect(f"orbit_sizes[{ordering}]", rep.orbit_sizes, want)
        res.expect(f"eta[{ordering}]", rep.eta, 2)
    return res


def _g48() -> CheckResult:
    res = CheckResult("g48")
    a = (3, 1, 1)
    rep = parity_check(a, a, a, Rectangle(4, 4))
    res.expect("c", rep.c, 2)
    res.expect("k", rep.k, 0)
    res.expect("omega_is_identity", rep.is_identity, True)
    res.expect("eta", rep.orbit_count, 2)
    res.expect("parity", rep.ok, True)
    return res


def _g49() -> CheckResult:
    res = CheckResult("g49")
    rep = parity_check((3, 2, 1), (4, 2, 1), (3, 2, 1), Rectangle(4, 5))
    res.expect("c", rep.c, 12)
    res.expect("k", rep.k, 13)
    res.expect("eta", rep.orbit_count, 1)
    res.expect("chi", rep.chi, -1)
    res.expect("parity", rep.ok, True)
    return res


PIERI_RECT = Rectangle(3, 6)
PIERI_ALPHA = (4, 2)
PIERI_BETA = (4,)
PIERI_GAMMA = complement((6, 4, 1), PIERI_RECT)
# full fillings of the rectangle: alpha holds 1..6, the box is 7, beta 8..11, gamma 12..18
PIERI_X_ROWS = (
    ((1, 2, 3, 4, 10, 11), (5, 6, 8, 9, 15, 16), (7, 12, 13, 14, 17, 18)),
    ((1, 2, 3, 4, 10, 11), (5, 6, 7, 9, 15, 16), (8, 12, 13, 14, 17, 18)),
    ((1, 2, 3, 4, 7, 11), (5, 6, 9, 10, 15, 16), (8, 12, 13, 14, 17, 18)),
)
PIERI_K_ROWS = (
    ((3, 4), (1, 2), (1,)),
    ((3, 4), (2, 3), (1,)),
)


def _pieri() -> CheckResult:
    res = CheckResult("pieri-5-3")
    rect = PIERI_RECT
    chains = pieri_ordered_chains(PIERI_ALPHA, PIERI_BETA, PIERI_GAMMA, rect)
    got_x = tuple(tuple(tuple(row) for row in c.to_tableau().rows()) for c in chains)
    res.expect("X", got_x, PIERI_X_ROWS)
    ks = k_tableaux(PIERI_ALPHA, PIERI_BETA, PIERI_GAMMA, rect)
    res.expect("K", tuple(sorted(t.rows for t in ks)), PIERI_K_ROWS)
    res.expect("k", len(ks), 2)
    res.expect("omega", pieri_permutation(PIERI_ALPHA, PIERI_BETA, PIERI_GAMMA, rect), [1, 2, 0])
    return res


def _promo() -> CheckResult:
    res = CheckResult("promo-2x2")
    rect = Rectangle(2, 2)
    syt = enumerate_standard(SkewShape((), rect.full))
    res.expect("syt_count", len(syt), 2)
    res.expect("promotion_swaps", [promotion(t) == s for t, s in zip(syt, reversed(syt))], [True, True])
    res.expect("k_promotion_count", k_promotion_count(rect), 1)
    res.expect("promotion_sign", promotion_sign(rect), 1)
    return res


EXAMPLES: dict[str, Callable[[], CheckResult]] = {
    "g38": _g38,
    "g37": _g37,
    "g48": _g48,
    "g49": _g49,
    "pieri-5-3": _pieri,
    "promo-2x2": _promo,
}


def verify_example(name: str) -> CheckResult:
    if name not in EXAMPLES:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    return EXAMPLES[name]()
