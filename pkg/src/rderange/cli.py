"""Command line: ``rderange table|verify|split|fiber``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import splitting as split_mod
from .condition import SplitCondition
from .oracle import Family, OracleCapError
from .permutation import PermutationError, parse_permutation
from .tables import METHODS, build_table, render
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def cmd_table(args) -> int:
    try:
        table = build_table(args.family, args.r, args.u, args.m, args.k, args.i,
                            args.n_max, args.method, cap=args.max_size)
    except (ValueError, OracleCapError) as exc:
        raise UsageError(str(exc)) from None
    _write(render(table, args.format), args.out)
    return 0


def cmd_verify(args) -> int:
    report = run_suite(args.suite, max_size=args.max_size, r_max=args.r_max, n_max=args.n_max)
    text = report.to_json() if args.format == "json" else report.to_text()
    _write(text, args.out)
    return 0 if report.ok else 1


def _read_perm(args):
    try:
        p = parse_permutation(args.perm, args.size)
    except PermutationError as exc:
        raise UsageError(str(exc)) from None
    if not 0 <= args.r <= p.size:
        raise UsageError(f"r={args.r} outside 0..{p.size}")
    return p


def cmd_split(args) -> int:
    p = _read_perm(args)
    q = split_mod.split(p, args.r)
    if args.format == "json":
        text = json.dumps({"input": str(p), "r": str(args.r), "split": str(q),
                           "split_one_line": [str(v) for v in q.images]}) + "\n"
    else:
        text = f"{p}\n{q}\n"
    _write(text, args.out)
    return 0


def cmd_fiber(args) -> int:
    p = _read_perm(args)
    try:
        w = SplitCondition.parse(args.w)
        members = split_mod.fiber(p, args.r, w)
    except (ValueError, PermutationError) as exc:
        raise UsageError(str(exc)) from None
    formula = split_mod.fiber_size_formula(args.r, w)
    if args.format == "json":
        text = json.dumps({"rho": str(p), "r": str(args.r), "w": str(w),
                           "fiber": [str(s) for s in members],
                           "size": str(len(members)), "formula": str(formula)}) + "\n"
    else:
        lines = [str(s) for s in members]
        lines.append(f"size {len(members)}, formula {formula}")
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return 0 if len(members) == formula else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rderange", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="tabulate one family for n = 0..n_max")
    t.add_argument("family", type=str.upper, choices=[f.value for f in Family])
    t.add_argument("--r", type=int, required=True)
    t.add_argument("--u", type=int, default=0)
    t.add_argument("--m", type=int, default=0)
    t.add_argument("--k", type=int)
    t.add_argument("--i", type=int, choices=(0, 1))
    t.add_argument("--n-max", type=int, default=10)
    t.add_argument("--method", type=str.upper, choices=METHODS, default="CLOSED_FORM")
    t.add_argument("--max-size", type=int, default=9, help="oracle cap on r + n")
    t.add_argument("--format", choices=("csv", "json", "bfile"), default="csv")
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--max-size", type=int, default=8, help="oracle cap on r + n")
    v.add_argument("--r-max", type=int, default=10)
    v.add_argument("--n-max", type=int, default=50)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--json", dest="format", action="store_const", const="json")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    for name, fn, hlp in (("split", cmd_split, "split front cycles"),
                          ("fiber", cmd_fiber, "list all gluings of a separated permutation")):
        s = sub.add_parser(name, help=hlp)
        s.add_argument("perm", help="'[2,1,4,3]' or '(1 2)(3 4)'")
        s.add_argument("--r", type=int, required=True)
        s.add_argument("--size", type=int, help="pad cycle form with fixed points up to this size")
        s.add_argument("--format", choices=("text", "json"), default="text")
        s.add_argument("--out")
        if name == "fiber":
            s.add_argument("--w", default="any",
                           help="any | k=K | parity=E | k=K,parity=E | residue=CmodD")
        s.set_defaults(func=fn)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(2, f"rderange {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
