"""Command-line interface.

Exit codes: 0 success / verified, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import abelian, bijection, verify
from .exact import QuadraticNumber, approx_decimal, format_value, parse_value
from .words import FIBONACCI_SLOPE, RationalSlopeError, SturmianParams, fibonacci_word, sturmian_prefix

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_slope(text: str, periodic: bool = False) -> QuadraticNumber:
    """``fib`` | ``quad:p,q,r,d`` | ``ratio:n/m`` (rational needs ``periodic``)."""
    if text == "fib":
        alpha = FIBONACCI_SLOPE
    else:
        try:
            alpha = parse_value(text)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if not 0 < alpha < 1:
        raise UsageError(f"slope {alpha} is not in (0, 1)")
    if alpha.is_rational and not periodic:
        raise UsageError(f"slope {alpha} is rational; pass --periodic to allow periodic words")
    return alpha


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected A..B or A") from None
    if hi_i < lo_i:
        raise UsageError(f"empty range {text!r}")
    return range(lo_i, hi_i + 1)


def render(rows: list[dict], fmt: str, meta: Optional[dict] = None) -> str:
    if fmt == "json":
        doc = {**(meta or {}), "rows": rows}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if not rows:
        return ""
    columns = list(rows[0])
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    cells = [columns] + [[str(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    return "".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n" for row in cells
    )


def _slope_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", default="fib", help="fib | quad:p,q,r,d | ratio:n/m")
    p.add_argument("--rho", default="0", help="intercept, same syntax as --alpha")
    p.add_argument("--periodic", action="store_true", help="allow a rational slope")


def _format_arg(p: argparse.ArgumentParser, default: str = "txt") -> None:
    p.add_argument("--format", choices=("txt", "csv", "json"), default=default)


def _params(args) -> SturmianParams:
    alpha = parse_slope(args.alpha, args.periodic)
    try:
        rho = parse_value(args.rho)
        return SturmianParams(alpha, rho, periodic=args.periodic)
    except (ValueError, RationalSlopeError) as exc:
        raise UsageError(str(exc)) from None


def cmd_generate(args, out) -> int:
    if args.length < 0:
        raise UsageError("--length must be non-negative")
    params = _params(args)
    word = sturmian_prefix(params, args.length)
    if args.format == "json":
        out.write(json.dumps({
            "alpha": format_value(params.alpha), "rho": format_value(params.rho),
            "length": args.length, "word": word,
        }) + "\n")
    else:
        out.write(word + "\n")
    return EXIT_OK


def cmd_fibword(args, out) -> int:
    if args.j < 0:
        raise UsageError("j must be non-negative")
    word = fibonacci_word(args.j)
    if args.format == "json":
        out.write(json.dumps({"j": args.j, "length": len(word), "word": word}) + "\n")
    else:
        out.write(word + "\n")
    return EXIT_OK


def cmd_bijection(args, out) -> int:
    if args.m < 1:
        raise UsageError("-m must be >= 1")
    params = _params(args)
    try:
        here = bijection.locate(params.alpha, params.rho, 1, args.m)
    except bijection.DegeneratePointError:
        here = None
    rows = []
    for f in bijection.all_factors(params.alpha, args.m):
        rows.append({
            "k": f.k,
            "left": format_value(f.left),
            "right": format_value(f.right),
            "left_decimal": approx_decimal(f.left, args.digits),
            "right_decimal": approx_decimal(f.right, args.digits),
            "factor": f.factor,
            "parikh": str(f.parikh),
            "parikh_class": f.parikh_class,
            "contains_alpha": f.k == here,
        })
    meta = {"alpha": format_value(params.alpha), "rho": format_value(params.rho), "m": args.m}
    out.write(render(rows, args.format, meta))
    return EXIT_OK


def _factorization_row(f: abelian.AbelianFactorization, word: str) -> dict:
    return {
        "m": f.period, "h": f.head, "b": f.blocks, "t": f.tail,
        "exponent": str(f.exponent), "block_parikh": str(f.block_parikh),
        "pieces": "|".join(f.pieces(word)),
    }


def cmd_period(args, out) -> int:
    word = args.word if args.word not in (None, "-") else sys.stdin.read()
    word = "".join(word.split())
    if not word:
        raise UsageError("empty word")
    f = abelian.min_abelian_period(word, tier=args.tier)
    if f is None:
        row = {"m": "-", "h": "-", "b": "-", "t": "-", "exponent": "-",
               "block_parikh": "-", "pieces": "-"}
    else:
        row = _factorization_row(f, word)
    out.write(render([row], args.format, {"length": len(word), "tier": args.tier}))
    return EXIT_OK


def cmd_prefix(args, out) -> int:
    if args.m < 1:
        raise UsageError("-m must be >= 1")
    alpha = parse_slope(args.alpha)
    found = abelian.longest_prefix_rep(alpha, args.m)
    if found is None:
        row = {"L": 0}
    else:
        L, f = found
        word = sturmian_prefix(SturmianParams(alpha), L)
        row = {"L": L, **_factorization_row(f, word)}
    out.write(render([row], args.format, {"alpha": format_value(alpha)}))
    return EXIT_OK


def cmd_scan(args, out) -> int:
    alpha = parse_slope(args.alpha)
    if args.max_m < 1 or args.length < 2 * args.max_m:
        raise UsageError("need --max-m >= 1 and --length >= 2 * max-m")
    rows = []
    for m in range(1, args.max_m + 1):
        L, start = abelian.k_m_witness(alpha, m, args.length)
        e = abelian.k_m_empirical(alpha, m, args.length)
        rows.append({
            "m": m, "length": L, "start": start, "exponent": str(e),
            "exponent_over_m": approx_decimal(e / m, args.digits),
        })
    out.write(render(rows, args.format, {"alpha": format_value(alpha), "N": args.length}))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    t = args.target
    kw = {}
    if args.j is not None:
        if t not in ("lp", "min-period", "identity", "power-at-period", "best-approx"):
            raise UsageError(f"--j does not apply to {t}")
        kw["js"] = parse_range(args.j)
    if args.max_m is not None:
        if t not in ("power-criterion", "lexorder", "parikh-split", "asymptotics"):
            raise UsageError(f"--max-m does not apply to {t}")
        kw["max_m"] = args.max_m
    if args.max_k is not None:
        if t != "power-criterion":
            raise UsageError("--max-k applies to power-criterion only")
        kw["max_k"] = args.max_k
    if args.alpha is not None:
        alpha = parse_slope(args.alpha)
        if t in ("lexorder", "parikh-split"):
            kw["slopes"] = {args.alpha: alpha}
        elif t in ("power-criterion", "best-approx"):
            kw["alpha"] = alpha
        else:
            raise UsageError(f"--alpha does not apply to {t}")
    try:
        report = verify.TARGETS[t](**kw)
    except verify.OutOfRangeError as exc:
        raise UsageError(f"refusing {t}: {exc}") from None
    out.write(render(report.rows, args.format, {"target": t, "passed": report.passed}))
    if args.format == "txt":
        n_fail = len(report.failures)
        verdict = "PASS" if report.passed else "FAIL"
        out.write(f"{t}: {verdict} ({len(report.rows) - n_fail}/{len(report.rows)} rows)\n")
    return EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sturmab", description="Sturmian words and their abelian repetitions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="prefix of a Sturmian word")
    _slope_args(p)
    p.add_argument("--length", type=int, required=True)
    _format_arg(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("fibword", help="finite Fibonacci word f_j")
    p.add_argument("j", type=int)
    _format_arg(p)
    p.set_defaults(func=cmd_fibword)

    p = sub.add_parser("bijection", help="intervals and factors of length m")
    _slope_args(p)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--digits", type=int, default=3)
    _format_arg(p)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("period", help="smallest abelian period of a word")
    p.add_argument("word", nargs="?", help="the word; read from stdin if absent or '-'")
    p.add_argument("--tier", choices=abelian.TIERS, default="relaxed")
    _format_arg(p)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("prefix", help="longest prefix that is an abelian repetition of period m")
    p.add_argument("--alpha", default="fib")
    p.add_argument("-m", type=int, required=True)
    _format_arg(p)
    p.set_defaults(func=cmd_prefix)

    p = sub.add_parser("scan", help="largest abelian-repetition exponent per period")
    p.add_argument("--alpha", default="fib")
    p.add_argument("--max-m", type=int, default=20)
    p.add_argument("--length", type=int, default=10_000)
    p.add_argument("--digits", type=int, default=6)
    _format_arg(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="check closed forms and tables against brute force")
    p.add_argument("target", choices=sorted(verify.TARGETS))
    p.add_argument("--j", help="index range A..B")
    p.add_argument("--max-m", type=int)
    p.add_argument("--max-k", type=int)
    p.add_argument("--alpha")
    _format_arg(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"sturmab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
