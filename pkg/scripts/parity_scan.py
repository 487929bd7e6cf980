"""Scan every first-order triple in the given rectangles and tabulate the parity identities.

Usage: python scripts/parity_scan.py [--jobs N] [--csv out.csv] 2x3 2x4 3x3
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter

from realschubert.core_shapes import Rectangle, format_partition
from realschubert.ktheory import parity_scan


def main(argv: list[str]) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("rects", nargs="+", type=Rectangle.parse)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--csv", default=None, help="also write one row per triple with c > 0")
    a = p.parse_args(argv)
    rows, failures = [], 0
    for rect in a.rects:
        reports = [r for r in parity_scan(rect, jobs=a.jobs) if r.c > 0]
        failures += sum(not r.ok for r in reports)
        exact = sum(r.integer_identity for r in reports)
        gaps = Counter(r.orbit_count - r.chi for r in reports)
        print(f"{rect}: {len(reports)} triples with c > 0, {sum(not r.ok for r in reports)} failures, "
              f"eta = c - k exactly in {exact}; eta - (c - k) histogram {dict(sorted(gaps.items()))}")
        for r in reports:
            rows.append([str(rect), format_partition(r.alpha), format_partition(r.beta), format_partition(r.gamma),
                         r.c, r.k, r.orbit_count, r.sign, int(r.ok)])
    if a.csv:
        with open(a.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["rect", "alpha", "beta", "gamma", "c", "k", "eta", "sign", "ok"])
            w.writerows(rows)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
