"""Command-line entry point: ``qverify <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, Sequence

from . import identities, oracle, theorems
from .errors import ParseError, QVerifyError, TooLarge, UnknownCheck, UnknownIdentity
from .expr import eval_expr
from .parse import parse_eta
from .report import CheckReport
from .series import extract_progression

MAX_ORDER = 200_000

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid order {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("order must be positive")
    if n > MAX_ORDER:
        raise argparse.ArgumentTypeError(f"order {n} exceeds the limit {MAX_ORDER}")
    return n


def _listing(coeffs: Sequence[int], out) -> None:
    for i, c in enumerate(coeffs):
        out.write(f"{i}\t{c}\n")


def _emit(reports: List[CheckReport], fmt: str, timings: bool, out) -> int:
    for r in reports:
        out.write((r.to_json(timings) if fmt == "structured" else r.to_text()) + "\n")
    if fmt == "text":
        bad = sum(not r.ok for r in reports)
        out.write(f"{len(reports) - bad}/{len(reports)} ok\n")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def cmd_expand(args, out) -> int:
    _listing(eval_expr(parse_eta(args.spec), args.order).coeffs, out)
    return EXIT_OK


def cmd_dissect(args, out) -> int:
    if args.t < 1 or not 0 <= args.r < args.t:
        raise _UsageError(f"invalid progression ({args.t}, {args.r})")
    expr = parse_eta(args.spec)
    s = eval_expr(expr, args.t * args.order + args.r)
    _listing(extract_progression(s, args.t, args.r).coeffs[: args.order], out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    n = args.order or identities.DEFAULT_ORDER
    if args.ids == ["all"]:
        reports = identities.verify_all(n)
    else:
        reports = [identities.verify_identity(i, n) for i in args.ids]
    return _emit(reports, args.format, args.timings, out)


def cmd_theorems(args, out) -> int:
    reports = theorems.run_all(args.profile, order=args.order, ids=args.ids or None, jobs=args.jobs)
    return _emit(reports, args.format, args.timings, out)


def cmd_oracle(args, out) -> int:
    p = args.params
    if args.statistic == "overpartitions" and len(p) == 1:
        value = oracle.count_overpartitions(p[0], method=args.method, max_n=args.max_n)
    elif args.statistic == "lmu" and len(p) == 3:
        value = oracle.count_lmu_regular(p[0], p[1], p[2], method=args.method, max_n=args.max_n)
    elif args.statistic == "ppo" and len(p) == 1:
        value = oracle.count_ppo(p[0], method=args.method, max_n=args.max_n)
    else:
        raise _UsageError("usage: oracle overpartitions N | oracle lmu L MU N | oracle ppo N")
    out.write(f"{value}\n")
    return EXIT_OK


def cmd_catalog(args, out) -> int:
    rows = identities.catalog(args.order)
    for row in rows:
        if args.format == "structured":
            out.write(json.dumps(row, sort_keys=True, separators=(",", ":")) + "\n")
        else:
            mod = f" (mod {row['modulus']})" if row["modulus"] else ""
            line = f"{row['id']}: {row['citation']}{mod}"
            if "order_verified" in row:
                v = row["order_verified"]
                line += f" [verified to order {v}]" if v else " [FAILED]"
            out.write(line + "\n")
    if args.order is not None and not all(r["order_verified"] for r in rows):
        return EXIT_FAIL
    return EXIT_OK


def _profile(text: str):
    if text in theorems.PROFILES:
        return text
    try:
        scale = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"profile must be one of {', '.join(theorems.PROFILES)} or a positive scale") from None
    if scale <= 0:
        raise argparse.ArgumentTypeError("profile scale must be positive")
    return scale


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qverify", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def reporting(p):
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--timings", action="store_true", help="include wall time (ms) in records")

    p = sub.add_parser("expand", help="print coefficients of an eta quotient")
    p.add_argument("spec")
    p.add_argument("--order", type=_order, default=20)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("dissect", help="print the progression t*n + r of an eta quotient")
    p.add_argument("spec")
    p.add_argument("t", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--order", type=_order, default=20, help="number of progression terms")
    p.set_defaults(func=cmd_dissect)

    p = sub.add_parser("verify", help="verify registered identities")
    p.add_argument("ids", nargs="+", metavar="ID", help="identity ids, or 'all'")
    p.add_argument("--order", type=_order)
    reporting(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("theorems", help="run the congruence suite")
    p.add_argument("ids", nargs="*", metavar="ID")
    p.add_argument("--profile", type=_profile, default="default",
                   help="fast, default, deep, or a numeric scale of the default orders")
    p.add_argument("--order", type=_order, help="use this order for every row")
    p.add_argument("--jobs", type=int, default=1)
    reporting(p)
    p.set_defaults(func=cmd_theorems)

    p = sub.add_parser("oracle", help="count by exhaustive enumeration")
    p.add_argument("statistic", choices=("overpartitions", "lmu", "ppo"))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--method", choices=("direct", "multiset"), default="direct")
    p.add_argument("--max-n", type=int, default=oracle.DEFAULT_MAX_N)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("catalog", help="list the identity registry")
    p.add_argument("--order", type=_order, help="also verify each row to this order")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as e:
        sys.stderr.write(f"qverify: parse error: {e}\n")
        if hasattr(args, "spec"):
            sys.stderr.write(f"  {args.spec}\n  {' ' * e.position}^\n")
        return EXIT_USAGE
    except (UnknownIdentity, UnknownCheck) as e:
        sys.stderr.write(f"qverify: unknown id {e.args[0]!r}\n")
        return EXIT_USAGE
    except (_UsageError, TooLarge, QVerifyError, ValueError) as e:
        sys.stderr.write(f"qverify: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
