"""Pi from the Viete product, its Chebyshev rewritings, and a Machin reference.

The three radical routes all compute the same truncated product

    P_M = prod_{m=1}^{M} a_m / 2
        = 2**-(M-1) * sum_{m=1}^{2**(M-1)} T_{2m-1}(a_M / 2)
        = 2**-M * U_{2**M - 1}(a_M / 2)

and return ``2 / P_M``, which approaches pi from below with relative error
close to ``(pi / 2**(M+1))**2 / 6``.
"""

from __future__ import annotations

import enum
import functools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import bigfix, chebyshev, radicals
from .bigfix import BigFixed

__all__ = [
    "PiMethod",
    "PiApproxReport",
    "EngineCapError",
    "PrecisionUnderflowError",
    "CHEB_MAX_M",
    "MIN_FRAC_BITS",
    "PI_50",
    "viete_sizing",
    "machin_frac_bits",
    "arctan_inv",
    "machin_pi",
    "guard_bits",
    "truncated_product",
    "pi_viete_product",
    "pi_cheb_t_sum",
    "pi_cheb_u",
    "pi_machin_reference",
    "pi_estimate",
    "convergence_sweep",
]

CHEB_MAX_M = 24
MIN_FRAC_BITS = 64
_GUARD_BITS = 64

PI_50 = "3.14159265358979323846264338327950288419716939937510"


class EngineCapError(ValueError):
    pass


class PrecisionUnderflowError(ValueError):
    pass


class PiMethod(enum.Enum):
    VIETE_PRODUCT = "viete"
    CHEB_T_SUM = "cheb-sum"
    CHEB_U_SINGLE = "cheb-u"
    MACHIN_REFERENCE = "machin"


@dataclass(frozen=True)
class PiApproxReport:
    """One pi estimate with its error against the Machin reference.

    ``M`` is the product length for the radical engines and the number of
    arctan(1/5) series terms for the Machin reference.
    """

    method: PiMethod
    M: int
    frac_bits: int
    estimate: BigFixed
    abs_error: BigFixed
    rel_error: BigFixed
    matched_decimal_digits: int

    def digits(self, places: int) -> str:
        return bigfix.to_decimal(self.estimate, places)


def viete_sizing(digits: int) -> tuple[int, int]:
    """Product length and working precision for ``digits`` correct decimals.

    ``M = ceil(1.661 D + 4)``, ``frac_bits = ceil(D log2 10) + ceil(log2 M) + 32``,
    never below the 64-bit engine minimum.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    M = math.ceil(Fraction("1.661") * digits + 4)
    frac_bits = _ceil_log2_10(digits) + math.ceil(math.log2(M)) + 32
    return M, max(frac_bits, MIN_FRAC_BITS)


def _ceil_log2_10(digits: int) -> int:
    # smallest b with 2**b >= 10**digits
    p = 10**digits
    b = p.bit_length()
    return b - 1 if p == 1 << (b - 1) else b


def machin_frac_bits(digits: int) -> int:
    return _ceil_log2_10(digits) + _GUARD_BITS


def arctan_inv(n: int, frac_bits: int) -> tuple[BigFixed, int]:
    """arctan(1/n) by its alternating Taylor series; returns (value, terms).

    Summation stops once ``n**-(2k+1)`` drops below one ulp.
    """
    if n < 2:
        raise ValueError("series needs n >= 2")
    power = BigFixed.one(frac_bits) / n
    n2 = n * n
    total = BigFixed.zero(frac_bits)
    k = 0
    while power.mantissa:
        term = power / (2 * k + 1)
        total = total - term if k & 1 else total + term
        power = power / n2
        k += 1
    return total, k


def _machin_terms(frac_bits: int) -> tuple[BigFixed, int]:
    a5, terms = arctan_inv(5, frac_bits)
    a239, _ = arctan_inv(239, frac_bits)
    return 16 * a5 - 4 * a239, terms


@functools.lru_cache(maxsize=32)
def machin_pi(frac_bits: int) -> BigFixed:
    """Pi at ``frac_bits``, computed with guard bits then floored."""
    value, _ = _machin_terms(frac_bits + _GUARD_BITS)
    return value.rescale(frac_bits)


def _matched_digits(rel_error: BigFixed) -> int:
    """Correct significant decimal digits, ``floor(-log10(rel_error))``.

    Capped at the decimal budget of the working precision.
    """
    budget = bigfix.decimal_budget(rel_error.frac_bits)
    if rel_error.mantissa <= 0:
        return budget
    log_rel = math.log10(rel_error.mantissa) - rel_error.frac_bits * math.log10(2)
    return max(0, min(budget, math.floor(-log_rel)))


def _report(method: PiMethod, M: int, estimate: BigFixed) -> PiApproxReport:
    reference = machin_pi(estimate.frac_bits)
    abs_error = abs(estimate - reference)
    rel_error = abs_error / reference
    return PiApproxReport(
        method=method,
        M=M,
        frac_bits=estimate.frac_bits,
        estimate=estimate,
        abs_error=abs_error,
        rel_error=rel_error,
        matched_decimal_digits=_matched_digits(rel_error),
    )


def _check_args(M: int, frac_bits: int, cap: int | None = None) -> None:
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if cap is not None and M > cap:
        raise EngineCapError(f"M={M} exceeds the engine cap of {cap}")
    if frac_bits < MIN_FRAC_BITS:
        raise PrecisionUnderflowError(
            f"frac_bits={frac_bits} is below the minimum of {MIN_FRAC_BITS}"
        )


def guard_bits(method: PiMethod | str, M: int) -> int:
    """Extra working bits an engine carries above the requested precision.

    Floor rounding drifts by about M ulp along the radical tower; the
    Chebyshev routes additionally amplify the error in a_M / 2 by the
    derivative of U_{2**M - 1}/2**M near 1, roughly 4**M / 3.
    """
    method = PiMethod(method)
    base = M.bit_length() + 8
    if method is PiMethod.VIETE_PRODUCT:
        return base
    return base + 2 * M


def _product_at(method: PiMethod, M: int, bits: int) -> BigFixed:
    seq = radicals.generate(M, bits)
    if method is PiMethod.VIETE_PRODUCT:
        product = BigFixed.one(bits)
        for c in seq.cosines():
            product = bigfix.mul(product, c)
        return product
    x = seq.last.half()
    if method is PiMethod.CHEB_T_SUM:
        # sum_odd_t returns twice the sum over the 2**(M-1) odd degrees
        return chebyshev.sum_odd_t((1 << M) - 1, x) >> M
    return chebyshev.eval_u_recurrence((1 << M) - 1, x) >> M


def _validated(method: PiMethod | str, M: int, frac_bits: int) -> PiMethod:
    method = PiMethod(method)
    if method is PiMethod.MACHIN_REFERENCE:
        raise ValueError("the Machin reference has no truncated product")
    cap = None if method is PiMethod.VIETE_PRODUCT else CHEB_MAX_M
    _check_args(M, frac_bits, cap)
    return method


def truncated_product(method: PiMethod | str, M: int, frac_bits: int) -> BigFixed:
    """P_M (an approximation of 2/pi) by the chosen route, at ``frac_bits``."""
    method = _validated(method, M, frac_bits)
    work = frac_bits + guard_bits(method, M)
    return _product_at(method, M, work).rescale(frac_bits)


def _engine(method: PiMethod, M: int, frac_bits: int) -> PiApproxReport:
    method = _validated(method, M, frac_bits)
    work = frac_bits + guard_bits(method, M)
    product = _product_at(method, M, work)
    estimate = (BigFixed.from_int(2, work) / product).rescale(frac_bits)
    return _report(method, M, estimate)


def pi_viete_product(M: int, frac_bits: int) -> PiApproxReport:
    return _engine(PiMethod.VIETE_PRODUCT, M, frac_bits)


def pi_cheb_t_sum(M: int, frac_bits: int) -> PiApproxReport:
    return _engine(PiMethod.CHEB_T_SUM, M, frac_bits)


def pi_cheb_u(M: int, frac_bits: int) -> PiApproxReport:
    return _engine(PiMethod.CHEB_U_SINGLE, M, frac_bits)


def pi_machin_reference(digits: int) -> PiApproxReport:
    """Pi to ``digits`` correct decimals via 16 atan(1/5) - 4 atan(1/239).

    This is the reference itself, so its error fields are zero.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    frac_bits = machin_frac_bits(digits)
    value, terms = _machin_terms(frac_bits)
    zero = BigFixed.zero(frac_bits)
    return PiApproxReport(
        method=PiMethod.MACHIN_REFERENCE,
        M=terms,
        frac_bits=frac_bits,
        estimate=value,
        abs_error=zero,
        rel_error=zero,
        matched_decimal_digits=digits,
    )


def pi_estimate(method: PiMethod | str, M: int, frac_bits: int) -> PiApproxReport:
    method = PiMethod(method)
    if method is PiMethod.MACHIN_REFERENCE:
        raise ValueError("the Machin reference is parameterized by digits, not M")
    return _engine(method, M, frac_bits)


def convergence_sweep(
    method: PiMethod | str,
    M_range: Iterable[int],
    frac_bits: int,
    workers: int | None = None,
) -> list[PiApproxReport]:
    """One report per M, in the order of ``M_range``.

    With ``workers > 1`` the Ms are evaluated in separate processes.
    """
    method = PiMethod(method)
    Ms = list(M_range)
    if method is PiMethod.MACHIN_REFERENCE:
        raise ValueError("the Machin reference cannot be swept over M")
    if workers and workers > 1 and len(Ms) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_engine, [method] * len(Ms), Ms, [frac_bits] * len(Ms)))
    return [_engine(method, M, frac_bits) for M in Ms]
