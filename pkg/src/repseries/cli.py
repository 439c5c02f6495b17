"""Command-line front end.

    repseries rep --group "U(3)" --n 2
    repseries classes --group G2 --format json
    repseries check --group F4 --n 2 --k 2

Exit status: 0 on success, 1 when a computation is refused (enumeration cap,
truncation failure, failed check), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys

from . import render
from .classes import CapExceeded, class_table
from .groups import ParseError, degrees, parse_group
from .oracle import cross_check
from .oracle.brute import CapExceeded as OracleCapExceeded
from .series import (
    DEFAULT_COMM_ORDER,
    SeriesResult,
    TruncationInsufficient,
    comm_hilbert_series,
    comm_series,
    euler_characteristic,
    hom_series,
    rep_hilbert_series,
    rep_series,
    smash_series,
)

COMMANDS = ("rep", "hilbert", "smash", "comm", "xq", "hom", "euler", "classes", "degrees", "check")

GROUP_HELP = (
    "product of factors separated by 'x': U(k), SU(k), SO(k), Spin(k), Sp(k), "
    "A_k, B_k, C_k, D_k, G2, F4, E6, E7, E8, T^k (case-insensitive)"
)


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repseries",
        description="Exact Poincare series of representation spaces of Z^n in compact Lie groups.",
        epilog="Set WEYL_ENUM_CAP to change the Weyl group enumeration cap (default 5000000).",
    )
    parser.add_argument("command", choices=COMMANDS, help=(
        "rep: Rep(Z^n,G)_1 (also Rep(Gamma,G)_1 for nilpotent Gamma with rank H_1 = n); "
        "hilbert: bigraded Rep series; smash: k-fold smash of T mod W; "
        "comm: Comm(G)_1/G; xq: X(q,G)_1/G; hom: Hom(Z^n,G)_1; euler: Euler characteristic; "
        "classes: class table; degrees: characteristic degrees; check: oracle cross-check"))
    parser.add_argument("--group", required=True, metavar="SPEC", help=GROUP_HELP)
    parser.add_argument("--n", type=int, default=None, help="number of commuting elements (default 1)")
    parser.add_argument("--k", type=int, default=None, help="smash power (default 1)")
    parser.add_argument("--q", type=int, default=2, help="nilpotency index for xq (>= 2)")
    parser.add_argument("--trunc", type=int, default=DEFAULT_COMM_ORDER,
                        help=f"truncation order in s for comm/xq (default {DEFAULT_COMM_ORDER})")
    parser.add_argument("--format", choices=("text", "latex", "json"), default="text")
    parser.add_argument("--bigraded", action="store_true",
                        help="emit the (s,t)-bigraded series for rep/comm/xq")
    return parser


def _nonneg(value: int | None, name: str, default: int, minimum: int = 0) -> int:
    value = default if value is None else value
    if value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}")
    return value


def _emit_series(res: SeriesResult, fmt: str) -> str:
    if fmt == "json":
        return render.dumps(render.result_json(res))
    return render.latex(res.value) if fmt == "latex" else render.text(res.value)


def dispatch(args: argparse.Namespace) -> tuple[str, int]:
    g = parse_group(args.group)
    cmd, fmt = args.command, args.format
    if cmd == "degrees":
        return render.degrees_doc(degrees(g), fmt), 0
    if cmd == "check":
        report = cross_check(g, _nonneg(args.n, "n", 3), _nonneg(args.k, "k", 3))
        doc = render.dumps(report.to_json()) if fmt == "json" else report.to_text()
        return doc, 0 if report.passed else 1

    table = class_table(g)
    if cmd == "classes":
        doc = render.dumps(render.table_json(table)) if fmt == "json" else render.table_text(table, fmt)
        return doc, 0
    if cmd == "rep":
        n = _nonneg(args.n, "n", 1)
        if args.bigraded:
            res = SeriesResult("rep_hilbert", g, n, rep_hilbert_series(table, n))
        else:
            res = SeriesResult("rep", g, n, rep_series(table, n))
    elif cmd == "hilbert":
        n = _nonneg(args.n, "n", 1)
        res = SeriesResult("rep_hilbert", g, n, rep_hilbert_series(table, n))
    elif cmd == "smash":
        k = _nonneg(args.k, "k", 1)
        res = SeriesResult("smash", g, k, smash_series(table, k))
    elif cmd in ("comm", "xq"):
        order = _nonneg(args.trunc, "trunc", DEFAULT_COMM_ORDER, 1)
        if cmd == "xq" and args.q < 2:
            raise UsageError("--q must be >= 2")
        if args.bigraded:
            fid = "xq" if cmd == "xq" else "comm_hilbert"
            res = SeriesResult(fid, g, order, comm_hilbert_series(table, order))
        else:
            res = SeriesResult("xq" if cmd == "xq" else "comm", g, order, comm_series(table, order))
    elif cmd == "hom":
        if args.n is None:
            raise UsageError("hom requires --n >= 1")
        n = _nonneg(args.n, "n", 1, 1)
        res = SeriesResult("hom", g, n, hom_series(table, degrees(g), n))
    else:
        n = _nonneg(args.n, "n", 1)
        res = SeriesResult("euler", g, n, euler_characteristic(table, n))
    return _emit_series(res, fmt), 0


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        doc, code = dispatch(args)
    except (ParseError, UsageError) as exc:
        print(f"repseries: error: {exc}", file=sys.stderr)
        return 2
    except (CapExceeded, OracleCapExceeded, TruncationInsufficient) as exc:
        print(f"repseries: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(doc)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
