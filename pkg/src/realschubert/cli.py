"""Command-line entry point: ``realschubert <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .catalog import EXAMPLES, verify_example
from .core_shapes import Rectangle, ShapeError, SkewShape, format_partition, parse_partition, parse_partitions
from .dual_equiv import enumerate_chains
from .growth_engine import promotion
from .ktheory import k_coeff, lr_coeff, parity_scan
from .monodromy import PRESETS, build_covering, cycles_of, omega_word, reorder, sign_of, word_orbits
from .osculating import divisibility_check, osculating_check
from .tableaux import enumerate_standard

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, text: str | None = None):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text if text is not None else json.dumps(obj, sort_keys=True, indent=2))


def _rect(text: str) -> Rectangle:
    try:
        return Rectangle.parse(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _part(text: str):
    try:
        return parse_partition(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parts(text: str):
    try:
        return parse_partitions(text)
    except ShapeError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def cmd_enumerate_chains(a) -> int:
    outer = a.outer if a.outer is not None else a.rect.full
    chains = enumerate_chains(a.inner, outer, a.types)
    text = "\n".join(f"{i}: {c}" for i, c in enumerate(chains)) or "(none)"
    _emit({"count": len(chains), "chains": [c.to_json() for c in chains]}, a.format, f"{len(chains)} chains\n{text}")
    return EXIT_OK


def _word(a, r: int):
    if a.word:
        return omega_word("user_supplied", r, a.word)
    return omega_word(a.preset, r)


def cmd_orbits(a) -> int:
    types = reorder(a.types, a.ordering)
    rep = word_orbits(types, a.rect, _word(a, len(types)))
    _emit(rep.to_json(), a.format,
          f"word: {rep.word}\nset size: {rep.set_size}\norbit sizes: {rep.orbit_sizes}\nsign: {rep.sign}")
    return EXIT_OK


def cmd_components(a) -> int:
    types = reorder(a.types, a.ordering)
    rep = word_orbits(types, a.rect, _word(a, len(types)))
    _emit({"eta": rep.eta, "set_size": rep.set_size, "orbit_sizes": rep.orbit_sizes}, a.format, f"eta={rep.eta}")
    return EXIT_OK


def cmd_parity_scan(a) -> int:
    jobs = a.jobs or os.cpu_count() or 1
    results, failures, integer_misses = [], 0, 0
    for rect in a.rect:
        for rep in parity_scan(rect, jobs=jobs):
            if rep.c == 0 and not a.all:
                continue
            failures += not rep.ok
            integer_misses += rep.c > 0 and not rep.integer_identity
            results.append(rep.to_json())
    summary = {"rects": [str(r) for r in a.rect], "instances": len(results), "failures": failures,
               "mod2_only": integer_misses}
    if a.format == "json":
        _emit({"summary": summary, "reports": results}, "json")
    else:
        print(f"{len(results)} instances, {failures} failures, {integer_misses} hold only mod 2")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_kcoeff(a) -> int:
    k = k_coeff(a.alpha, a.beta, a.gamma, a.rect)
    _emit({"k": k}, a.format, str(k))
    return EXIT_OK


def cmd_lrcoeff(a) -> int:
    outer = a.outer if a.outer is not None else a.rect.full
    if not a.rect.fits(outer):
        raise UsageError(f"{format_partition(outer)} does not fit in {a.rect}")
    c = lr_coeff(a.inner, a.types, outer)
    _emit({"c": c}, a.format, str(c))
    return EXIT_OK


def cmd_verify_example(a) -> int:
    names = sorted(EXAMPLES) if a.id == "all" else [a.id]
    ok = True
    out = []
    for name in names:
        res = verify_example(name)
        ok &= res.ok
        out.append(res.to_json())
        if a.format != "json":
            for label, got, want in res.checks:
                mark = "ok" if got == want else "FAIL"
                print(f"{name} {label}: {got} (expected {want}) {mark}")
    if a.format == "json":
        _emit(out if len(out) > 1 else out[0], "json")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export_covering(a) -> int:
    model = build_covering(a.types, a.rect)
    if a.format == "dot":
        print(model.to_dot())
    else:
        print(model.to_json_text())
    return EXIT_OK


def cmd_osculating_check(a) -> int:
    rep = osculating_check(a.n, a.trials, a.seed)
    if a.divisibility:
        rep["divisibility"] = [divisibility_check(r, seed=a.seed) for r in a.divisibility]
    failures = rep["failures"] + sum(d["failures"] for d in rep.get("divisibility", []))
    _emit(rep, a.format, f"checked {rep['checked']} minor identities, {failures} failures")
    return EXIT_FAIL if failures else EXIT_OK


def cmd_promotion_orbits(a) -> int:
    syt = enumerate_standard(SkewShape((), a.rect.full))
    index = {t: i for i, t in enumerate(syt)}
    perm = [index[promotion(t)] for t in syt]
    cyc = cycles_of(perm)
    obj = {"rect": str(a.rect), "set_size": len(syt), "orbit_sizes": sorted(len(c) for c in cyc),
           "eta": len(cyc), "sign": sign_of(perm)}
    _emit(obj, a.format, f"{len(syt)} tableaux, orbit sizes {obj['orbit_sizes']}, sign {obj['sign']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realschubert", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        return sp

    def add_problem(sp, ordering=True):
        sp.add_argument("--rect", type=_rect, required=True, help="KxM: K rows, M columns")
        sp.add_argument("--types", type=_parts, required=True, help='e.g. "2;2,1;3,1;3,2"')
        if ordering:
            sp.add_argument("--ordering", default=None, help="circular ordering such as 1324")
            sp.add_argument("--preset", choices=PRESETS[:-1], default="standard_cor47")
            sp.add_argument("--word", default=None, help='explicit word such as "Sh2 Esh2" (box second)')

    sp = add("enumerate-chains", cmd_enumerate_chains, "list chains of dual equivalence classes")
    sp.add_argument("--rect", type=_rect, required=True)
    sp.add_argument("--inner", type=_part, default=())
    sp.add_argument("--outer", type=_part, default=None)
    sp.add_argument("--types", type=_parts, required=True)

    add_problem(add("orbits", cmd_orbits, "orbit report of a monodromy word"))
    add_problem(add("components", cmd_components, "number of real components"))

    sp = add("parity-scan", cmd_parity_scan, "check the parity identities on every triple")
    sp.add_argument("--rect", type=_rect, action="append", required=True)
    sp.add_argument("--jobs", type=int, default=0, help="worker processes (0 = all cores)")
    sp.add_argument("--all", action="store_true", help="include triples with c = 0")

    sp = add("kcoeff", cmd_kcoeff, "first-order K-theoretic coefficient")
    sp.add_argument("--rect", type=_rect, required=True)
    for name in ("alpha", "beta", "gamma"):
        sp.add_argument(f"--{name}", type=_part, required=True)

    sp = add("lrcoeff", cmd_lrcoeff, "Littlewood-Richardson number as a chain count")
    sp.add_argument("--rect", type=_rect, required=True)
    sp.add_argument("--inner", type=_part, default=())
    sp.add_argument("--outer", type=_part, default=None)
    sp.add_argument("--types", type=_parts, required=True)

    sp = add("verify-example", cmd_verify_example, "check a named worked instance")
    sp.add_argument("id", choices=sorted(EXAMPLES) + ["all"])

    sp = sub.add_parser("export-covering", help="covering graph as DOT or JSON")
    sp.set_defaults(func=cmd_export_covering)
    sp.add_argument("--format", choices=("dot", "json"), default="dot")
    add_problem(sp, ordering=False)

    sp = add("osculating-check", cmd_osculating_check, "exact osculating minor identities")
    sp.add_argument("--n", type=int, default=8)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--divisibility", type=_rect, action="append", default=[],
                    help="also check divisibility in this rectangle (repeatable)")

    sp = add("promotion-orbits", cmd_promotion_orbits, "orbits of promotion on a rectangle")
    sp.add_argument("--rect", type=_rect, required=True)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ShapeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
