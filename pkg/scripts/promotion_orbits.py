"""Promotion on standard tableaux of small rectangles against the increasing-tableau count.

For each rectangle prints the promotion orbit sizes, the sign of promotion, the
Bender-Knuth swap total and the number of increasing fillings with one repeat.

Usage: python scripts/promotion_orbits.py [max_area]
"""

from __future__ import annotations

import sys

from realschubert.core_shapes import Rectangle, SkewShape
from realschubert.growth_engine import promotion
from realschubert.ktheory import bk_swap_pair_counts, k_promotion_count
from realschubert.monodromy import cycles_of, sign_of
from realschubert.tableaux import enumerate_standard


def main(argv: list[str]) -> int:
    max_area = int(argv[0]) if argv else 12
    bad = 0
    print(f"{'rect':>5} {'#SYT':>6} {'sign':>4} {'sum|Y|':>7} {'k':>7}  orbit sizes")
    for rows in range(2, max_area + 1):
        for cols in range(rows, max_area // rows + 1):
            rect = Rectangle(rows, cols)
            syt = enumerate_standard(SkewShape((), rect.full))
            index = {t: i for i, t in enumerate(syt)}
            perm = [index[promotion(t)] for t in syt]
            sizes = sorted(len(c) for c in cycles_of(perm))
            swaps, k = sum(bk_swap_pair_counts(rect)), k_promotion_count(rect)
            bad += not (sign_of(perm) == swaps % 2 == k % 2)
            print(f"{str(rect):>5} {len(syt):>6} {sign_of(perm):>4} {swaps:>7} {k:>7}  {sizes}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
