"""Command-line front end.

Subcommands: ``pi``, ``sinc-error``, ``identity-check``, ``bench``.

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from decimal import Decimal, localcontext

import numpy as np

from . import bigfix, chebyshev, pi_engines, sinc_approx
from .bigfix import BigFixed
from .pi_engines import PiMethod
from .sinc_approx import SincMethod

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_USAGE = 2
EXIT_CAP = 3

BENCH_COLUMNS = ("method", "M", "frac_bits", "rel_error", "matched_digits", "wall_ms")
PI_COLUMNS = ("method", "M", "frac_bits", "digits", "estimate", "rel_error",
              "matched_digits", "wall_ms")
SINC_COLUMNS = ("method", "parameter", "t_lo", "t_hi", "grid_points", "sup_error",
                "argmax_t", "wall_ms")
IDENTITY_COLUMNS = ("identity", "M", "max_deviation", "tolerance", "status", "wall_ms")

DEFAULT_FRAC_BITS = 256
DEFAULT_PRINTED_DIGITS = 30
IDENTITY_T_RANGE = (-20.0, 20.0)

_SINC_ALIASES = {"cos-product": "product"}
_CAP_ERRORS = (pi_engines.EngineCapError, sinc_approx.SincCapError, chebyshev.DegreeCapError)


class UsageError(Exception):
    pass


def format_bigfixed(x: BigFixed, sig: int = 17) -> str:
    """Scientific notation with ``sig`` significant digits."""
    if x.mantissa == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = sig + 10
        value = Decimal(x.mantissa) / (Decimal(2) ** x.frac_bits)
        return f"{value:.{sig - 1}e}"


def block_digits(text: str) -> str:
    """``3.1415926535 8979323846 ...``: blocks of 10, 50 digits per line."""
    whole, _, frac = text.partition(".")
    if not frac:
        return whole
    blocks = [frac[i:i + 10] for i in range(0, len(frac), 10)]
    lines = [" ".join(blocks[i:i + 5]) for i in range(0, len(blocks), 5)]
    pad = " " * (len(whole) + 1)
    return f"{whole}." + ("\n" + pad).join(lines)


def _fmt(value):
    # BigFixed errors can fall far below the double range, so they stay text
    if isinstance(value, BigFixed):
        return format_bigfixed(value)
    return value


class _Writer:
    def __init__(self, stream, fmt: str, columns, timing: bool):
        self.stream = stream
        self.fmt = fmt
        self.columns = columns
        self.timing = timing
        self._csv = None

    def text(self, line: str) -> None:
        self.stream.write(line + "\n")

    def row(self, record: dict) -> None:
        if not self.timing:
            record = dict(record, wall_ms=None)
        values = {k: _fmt(record.get(k)) for k in self.columns}
        if self.fmt == "json":
            self.stream.write(json.dumps(values) + "\n")
            return
        if self._csv is None:
            self._csv = csv.writer(self.stream, lineterminator="\n")
            self._csv.writerow(self.columns)
        self._csv.writerow(["" if v is None else v for v in values.values()])


def _elapsed_ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1e3, 3)


# subcommands

def cmd_pi(args, out: _Writer) -> int:
    method = PiMethod(args.method)
    start = time.perf_counter()
    if method is PiMethod.MACHIN_REFERENCE:
        if args.digits is None or args.terms is not None:
            raise UsageError("machin takes --digits only")
        report = pi_engines.pi_machin_reference(args.digits)
        printed = args.digits
    else:
        if method is PiMethod.VIETE_PRODUCT and (args.terms is None) == (args.digits is None):
            raise UsageError("viete takes exactly one of --terms or --digits")
        if method is not PiMethod.VIETE_PRODUCT and args.terms is None:
            raise UsageError(f"{method.value} requires --terms")
        if args.terms is not None:
            M = args.terms
            frac_bits = args.frac_bits or DEFAULT_FRAC_BITS
        else:
            if args.digits < 1:
                raise UsageError("--digits must be >= 1")
            M, frac_bits = pi_engines.viete_sizing(args.digits)
            frac_bits = args.frac_bits or frac_bits
        if M < 1:
            raise UsageError("--terms must be >= 1")
        report = pi_engines.pi_estimate(method, M, frac_bits)
        budget = bigfix.decimal_budget(report.frac_bits)
        printed = args.digits if args.digits is not None else min(DEFAULT_PRINTED_DIGITS, budget)
    wall = _elapsed_ms(start)
    text = report.digits(printed)
    out.text(text if args.raw else block_digits(text))
    out.row({
        "method": method.value,
        "M": report.M,
        "frac_bits": report.frac_bits,
        "digits": printed,
        "estimate": text,
        "rel_error": report.rel_error,
        "matched_digits": report.matched_decimal_digits,
        "wall_ms": wall,
    })
    return EXIT_OK


def cmd_sinc_error(args, out: _Writer) -> int:
    method = SincMethod(_SINC_ALIASES.get(args.method, args.method))
    t_lo, t_hi = args.range
    if not t_lo < t_hi:
        raise UsageError(f"degenerate range [{t_lo}, {t_hi}]: need t_lo < t_hi")
    if args.grid < 2:
        raise UsageError("--grid must be >= 2")
    if args.param < 1:
        raise UsageError("--param must be >= 1")
    start = time.perf_counter()
    report = sinc_approx.measure_sup_error(method, args.param, (t_lo, t_hi), args.grid)
    out.row({
        "method": method.value,
        "parameter": report.parameter,
        "t_lo": report.t_lo,
        "t_hi": report.t_hi,
        "grid_points": report.grid_points,
        "sup_error": report.sup_error,
        "argmax_t": report.argmax_t,
        "wall_ms": _elapsed_ms(start),
    })
    return EXIT_OK


def identity_deviations(M: int, grid_points: int = 1001, frac_bits: int = DEFAULT_FRAC_BITS):
    """Yield ``(name, max_deviation)`` for every identity checked at ``M``."""
    t = np.linspace(*IDENTITY_T_RANGE, grid_points)
    theta = np.linspace(0.0, np.pi, 1000)
    yield "t-of-cos", float(np.max(np.abs(
        chebyshev.eval_t_recurrence(M, np.cos(theta)) - np.cos(M * theta))))

    product = sinc_approx.sinc_cos_product(t, M)
    cos_sum = sinc_approx.sinc_cos_sum(t, M)
    L = 1 << (M - 1)
    t_sum = sinc_approx.sinc_t_sum(t, L)
    yield "product-vs-cos-sum", float(np.max(np.abs(product - cos_sum)))
    yield "cos-sum-vs-t-sum", float(np.max(np.abs(cos_sum - t_sum)))
    yield "t-sum-vs-u", float(np.max(np.abs(t_sum - sinc_approx.sinc_u(t, 2 * L))))

    # 2 sum T_odd = U_K on [-1, 1], scaled by sup|U_K| = K + 1
    K = (1 << M) - 1
    x = np.linspace(-1.0, 1.0, grid_points)
    yield "odd-t-vs-u-poly", float(np.max(np.abs(
        chebyshev.sum_odd_t(K, x) - chebyshev.eval_u_recurrence(K, x))) / (K + 1))

    viete = pi_engines.truncated_product(PiMethod.VIETE_PRODUCT, M, frac_bits)
    t_route = pi_engines.truncated_product(PiMethod.CHEB_T_SUM, M, frac_bits)
    u_route = pi_engines.truncated_product(PiMethod.CHEB_U_SINGLE, M, frac_bits)
    yield "pi-product-vs-t-sum", float(abs(viete - t_route))
    yield "pi-t-sum-vs-u", float(abs(t_route - u_route))


def cmd_identity_check(args, out: _Writer) -> int:
    if args.max_m < 1:
        raise UsageError("--max-m must be >= 1")
    if args.max_m > pi_engines.CHEB_MAX_M:
        raise pi_engines.EngineCapError(
            f"--max-m {args.max_m} exceeds the engine cap of {pi_engines.CHEB_MAX_M}")
    failed = []
    for M in range(1, args.max_m + 1):
        start = time.perf_counter()
        for name, deviation in identity_deviations(M, args.grid):
            ok = deviation <= args.tolerance
            row = {
                "identity": name,
                "M": M,
                "max_deviation": deviation,
                "tolerance": args.tolerance,
                "status": "pass" if ok else "FAIL",
                "wall_ms": _elapsed_ms(start),
            }
            out.row(row)
            if not ok:
                failed.append(row)
            start = time.perf_counter()
    for row in failed:
        print(f"identity violated: {row['identity']} at M={row['M']}: "
              f"{row['max_deviation']!r} > {row['tolerance']!r}", file=sys.stderr)
    return EXIT_IDENTITY if failed else EXIT_OK


def cmd_bench(args, out: _Writer) -> int:
    method = PiMethod(args.method)
    if method is PiMethod.MACHIN_REFERENCE:
        raise UsageError("bench sweeps M; machin has no M")
    lo, hi = args.m_range
    if lo < 1 or hi < lo:
        raise UsageError(f"invalid --m-range {lo} {hi}")
    for M in range(lo, hi + 1):
        start = time.perf_counter()
        report = pi_engines.pi_estimate(method, M, args.frac_bits)
        out.row({
            "method": method.value,
            "M": M,
            "frac_bits": report.frac_bits,
            "rel_error": report.rel_error,
            "matched_digits": report.matched_decimal_digits,
            "wall_ms": _elapsed_ms(start),
        })
    return EXIT_OK


# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--no-timing", action="store_true",
                        help="leave wall_ms empty so output is reproducible")

    parser = argparse.ArgumentParser(
        prog="vietecheb",
        description="Viete/Chebyshev pi engines and sinc approximation tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", parents=[common], help="compute pi")
    p.add_argument("--method", choices=[m.value for m in PiMethod], default="viete")
    p.add_argument("--terms", type=int, help="product length M")
    p.add_argument("--digits", type=int,
                   help="decimal places (viete: sizes M and precision; others: printed digits)")
    p.add_argument("--frac-bits", type=int, default=None, help="working precision override")
    p.add_argument("--raw", action="store_true", help="print digits without blocking")
    p.set_defaults(handler=cmd_pi, columns=PI_COLUMNS)

    p = sub.add_parser("sinc-error", parents=[common], help="sup-norm error of a sinc approximant")
    p.add_argument("--method", required=True,
                   choices=[m.value for m in SincMethod] + list(_SINC_ALIASES))
    p.add_argument("--param", type=int, required=True, help="M, L or N for the method")
    p.add_argument("--range", type=float, nargs=2, default=(-10.0, 10.0),
                   metavar=("T_LO", "T_HI"))
    p.add_argument("--grid", type=int, default=100001)
    p.set_defaults(handler=cmd_sinc_error, columns=SINC_COLUMNS)

    p = sub.add_parser("identity-check", parents=[common],
                       help="check the product-to-sum identities up to --max-m")
    p.add_argument("--max-m", type=int, default=10)
    p.add_argument("--tolerance", type=float, default=1e-12)
    p.add_argument("--grid", type=int, default=1001)
    p.set_defaults(handler=cmd_identity_check, columns=IDENTITY_COLUMNS)

    p = sub.add_parser("bench", parents=[common], help="convergence sweep over M")
    p.add_argument("--method", choices=[m.value for m in PiMethod], default="viete")
    p.add_argument("--m-range", type=int, nargs=2, required=True, metavar=("M_LO", "M_HI"))
    p.add_argument("--frac-bits", type=int, default=DEFAULT_FRAC_BITS)
    p.set_defaults(handler=cmd_bench, columns=BENCH_COLUMNS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    stream = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = _Writer(stream, args.format, args.columns, not args.no_timing)
        return args.handler(args, writer)
    except _CAP_ERRORS as exc:
        print(f"vietecheb: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"vietecheb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if stream is not sys.stdout:
            stream.close()


if __name__ == "__main__":
    sys.exit(main())
