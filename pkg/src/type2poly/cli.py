"""Command-line front end: ``type2poly table`` and ``type2poly verify``.

Exit codes: 0 success, 1 at least one identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import families, identities
from .families import Family, FamilyId
from .tables import FORMATS, parse_rational, render_table

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def parse_alpha_set(text: str) -> tuple[int, ...]:
    """``"-3..3"`` (inclusive range) or a comma list such as ``"-2,0,1"``."""
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if lo > hi:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha set {text!r}; use LO..HI or a comma list") from None


def _family_arg(text: str) -> Family:
    try:
        return Family.parse(text)
    except ValueError:
        names = ", ".join(f.cli_name for f in Family)
        raise argparse.ArgumentTypeError(f"unknown family {text!r} (choose from {names})") from None


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="type2poly",
        description="Exact tables and identity checks for type 2 Changhee, Daehee, Euler and Bernoulli families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print a family table")
    p.add_argument("family", type=_family_arg, help="e.g. type2-changhee, stirling2, bernoulli")
    p.add_argument("--order", type=int, default=1, help="integer order (type2 Bernoulli/Changhee/Daehee only)")
    p.add_argument("--max-n", type=_nonneg_int, default=10)
    p.add_argument("--x", type=_rational_arg, default=None, help="evaluate polynomials at this rational (use --x=-1/2 for negatives)")
    p.add_argument("--format", choices=FORMATS, default="plain")

    v = sub.add_parser("verify", help="check identities coefficient by coefficient")
    v.add_argument("--identity", choices=identities.IDENTITY_NAMES + ("all",), default="all")
    v.add_argument("--max-n", type=_nonneg_int, default=identities.DEFAULT_N)
    v.add_argument("--k-max", type=_nonneg_int, default=identities.DEFAULT_K_MAX)
    v.add_argument("--alpha-set", type=parse_alpha_set, default=identities.DEFAULT_ALPHAS,
                   help="orders for cor1: LO..HI or comma list (use --alpha-set=-3..3)")
    v.add_argument("--format", choices=FORMATS, default="plain")
    v.add_argument("--verbose", action="store_true", help="collect every failure, not only the first")

    b = sub.add_parser("bench", help="build every family over Q and report coefficient bit growth")
    b.add_argument("--max-n", type=_nonneg_int, default=64)
    return parser


def cmd_table(family, order: int = 1, max_n: int = 10, x=None, fmt: str = "plain", out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        fid = FamilyId(family, order)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    table = families.family_table(fid.family, max_n, fid.order)
    if x is not None and table.is_triangle:
        print("error: --x does not apply to Stirling triangles", file=err)
        return EXIT_USAGE
    out.write(render_table(table, fmt, x))
    return EXIT_OK


def format_reports(reports, fmt: str, verbose: bool = False) -> str:
    if fmt == "json":
        return "".join(json.dumps(r.to_dict(verbose)) + "\n" for r in reports)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["identity", "max_order", "passed", "n", "k", "lhs", "rhs"])
        for r in reports:
            fails = r.failures if verbose else ((r.first_failure,) if r.first_failure else ())
            if not fails:
                w.writerow([r.identity, r.max_order, "true", "", "", "", ""])
            for f in fails:
                w.writerow([r.identity, r.max_order, "false", f.n, "" if f.k is None else f.k, f.lhs, f.rhs])
        return buf.getvalue()
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.identity:<9} {status}  N={r.max_order}  ({r.elapsed:.3f}s)")
        fails = r.failures if verbose else ((r.first_failure,) if r.first_failure else ())
        for f in fails:
            where = f"n={f.n}" + ("" if f.k is None else f" k={f.k}")
            lines.append(f"    {where}: lhs = {f.lhs} ; rhs = {f.rhs}")
    return "\n".join(lines) + "\n"


def cmd_verify(identity: str = "all", N: int = identities.DEFAULT_N, k_max: int = identities.DEFAULT_K_MAX,
               alpha_set=identities.DEFAULT_ALPHAS, fmt: str = "plain", verbose: bool = False, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    names = identities.IDENTITY_NAMES if identity == "all" else (identity,)
    try:
        reports = [identities.run_identity(name, N, k_max, alpha_set, verbose) for name in names]
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_USAGE
    out.write(format_reports(reports, fmt, verbose))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED


def cmd_bench(max_n: int, out=None) -> int:
    out = out or sys.stdout
    results = families.benchmark(max_n)
    out.write(f"{'family':<16} {'seconds':>8} {'max bits':>9}\n")
    for name, (seconds, bits) in results.items():
        out.write(f"{name:<16} {seconds:>8.3f} {bits:>9}\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if args.command == "table":
        return cmd_table(args.family, args.order, args.max_n, args.x, args.format)
    if args.command == "verify":
        return cmd_verify(args.identity, args.max_n, args.k_max, args.alpha_set, args.format, args.verbose)
    return cmd_bench(args.max_n)
