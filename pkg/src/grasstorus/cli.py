"""Command-line entry point: ``grasstorus <command> ...``.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .crossratio import NON_ADMISSIBLE, STRONG, WEAK, classify_all
from .degeneration import LaurentPlane, limit_point
from .exact_scalar import format_point
from .golden import check_g52, g42_checks, g52_verdict
from .momentmap import admissible_polytope
from .param_space import virtual_space_of
from .strata import Signature, enumerate_strata, is_admissible, stabilizer_lattice
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _err(msg: str) -> int:
    sys.stderr.write(f"grasstorus: {msg}\n")
    return EXIT_USAGE


def cmd_enumerate(args) -> int:
    if not 4 <= args.n <= 8:
        return _err("enumerate needs 4 <= n <= 8")
    rows = []
    for sig in enumerate_strata(args.n):
        poly = admissible_polytope(sig)
        kinds = [c.kind for c in classify_all(sig).values()]
        rows.append({
            "signature": [list(pr) for pr in sig.vanishing],
            "polytope_dim": poly.dim,
            "vertices": len(poly.vertices),
            "stabilizer_rank": stabilizer_lattice(sig).rank,
            "strong": kinds.count(STRONG),
            "weak": kinds.count(WEAK),
            "non_admissible": kinds.count(NON_ADMISSIBLE),
        })
    if args.json:
        _emit({"n": args.n, "count": len(rows), "strata": rows})
    else:
        print(f"{'signature':<40} dim verts stab strong weak non-adm")
        for r in rows:
            label = ";".join(f"{i},{j}" for i, j in r["signature"]) or "main"
            print(f"{label:<40} {r['polytope_dim']:>3} {r['vertices']:>5} {r['stabilizer_rank']:>4} "
                  f"{r['strong']:>6} {r['weak']:>4} {r['non_admissible']:>7}")
        print(f"{len(rows)} strata")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.samples < 0:
        return _err("--samples must be non-negative")
    try:
        tally = run_suite(args.suite, args.n, args.samples, args.seed)
    except ValueError as exc:
        return _err(str(exc))
    report = {
        "suite": args.suite, "n": args.n, "samples": args.samples, "seed": args.seed,
        "passed": tally.passed, "checks": tally.to_json(),
    }
    if args.json:
        _emit(report)
    else:
        for name, c in report["checks"].items():
            print(f"{name:<28} checked {c['checked']:>8}  failed {c['failed']}")
        print("PASS" if tally.passed else "FAIL")
    return EXIT_OK if tally.passed else EXIT_FAIL


def cmd_limit(args) -> int:
    try:
        family = LaurentPlane.load(args.family)
    except (OSError, ValueError, TypeError, KeyError, ZeroDivisionError) as exc:
        return _err(f"cannot read family: {exc}")
    rep = limit_point(family)
    if args.json:
        _emit(rep.to_json())
    else:
        print(f"limit signature: {rep.limit_signature.label()}")
        print(f"limit tuple:     {rep.limit_tuple}")
        print(f"in virtual space of limit stratum: {rep.member_of_virtual}")
    return EXIT_OK if rep.member_of_virtual else EXIT_FAIL


def cmd_classify(args) -> int:
    if args.n < 4:
        return _err("classify needs n >= 4")
    try:
        sig = Signature.parse(args.n, args.signature)
    except ValueError as exc:
        return _err(str(exc))
    if not is_admissible(sig):
        msg = f"signature {sig.label()} is not realizable on G({args.n},2)"
        if args.json:
            _emit({"n": args.n, "signature": sig.to_json()["vanishing"], "admissible": False})
        else:
            print(msg)
        return EXIT_FAIL
    status = classify_all(sig)
    desc = virtual_space_of(sig)
    report = {
        "n": args.n,
        "signature": sig.to_json()["vanishing"],
        "admissible": True,
        "classification": [
            {"tuple": list(t), "kind": c.kind, **({"forced": format_point(c.forced)} if c.forced else {})}
            for t, c in status.items()
        ],
        "virtual_space": desc.to_json(),
    }
    if args.json:
        _emit(report)
    else:
        for t, c in status.items():
            print(f"w{''.join(map(str, t))}: {c}")
        for con in desc.constraints:
            print(f"constraint: {con}")
    return EXIT_OK


def cmd_paper_check(args) -> int:
    if args.case == "g42":
        checks = g42_checks()
        ok = all(passed for _, passed in checks)
        if args.json:
            _emit({"case": "g42", "passed": ok, "checks": [{"name": n, "passed": p} for n, p in checks]})
        else:
            for name, passed in checks:
                print(f"{'PASS' if passed else 'FAIL'}  {name}")
        return EXIT_OK if ok else EXIT_FAIL
    rows, extra = check_g52(samples=args.samples, seed=args.seed)
    ok = g52_verdict(rows, extra)
    if args.json:
        _emit({
            "case": "g52", "passed": ok, "rows_compared": len(rows),
            "rows": [r.to_json() for r in rows],
            "checks": [{"name": n, "passed": p} for n, p in extra],
        })
    else:
        for r in rows:
            line = f"{r.status:<18} {r.row.label:<12} {';'.join(r.row.entries)}"
            if r.row.disputed:
                line += f"  ->  {';'.join(r.row.derived)}  ({r.row.dispute})"
                if not r.row.preregistered:
                    line += "  [not pre-registered]"
            print(line)
        for name, passed in extra:
            print(f"{'PASS' if passed else 'FAIL':<18} {name}")
        print(f"{len(rows)} table rows compared: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grasstorus", description="Torus orbits and cross-ratios on G(n,2).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every stratum of G(n,2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run a randomized exact verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limit", help="limit of a one-parameter family as t -> 0")
    p.add_argument("--family", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_limit)

    p = sub.add_parser("classify", help="cross-ratio classification and virtual space of a stratum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--signature", required=True, help='vanishing pairs, e.g. "1,2;3,4"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("paper-check", help="compare against the tabulated G(4,2) and G(5,2) virtual spaces")
    p.add_argument("--case", choices=("g42", "g52"), required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_paper_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
