"""Recompute every named worked instance and print each check next to its expected value.

Usage: python scripts/reproduce_examples.py [id ...]
"""

from __future__ import annotations

import sys
import time

from realschubert.catalog import EXAMPLES, verify_example


def main(argv: list[str]) -> int:
    names = argv or sorted(EXAMPLES)
    all_ok = True
    for name in names:
        start = time.perf_counter()
        res = verify_example(name)
        elapsed = time.perf_counter() - start
        all_ok &= res.ok
        print(f"== {name}: {'ok' if res.ok else 'FAILED'} ({elapsed:.2f}s)")
        for label, got, want in res.checks:
            print(f"   {label:<24} got {got!s:<28} expected {want}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
