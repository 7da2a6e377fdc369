"""Chebyshev polynomials of the first (T) and second (U) kind.

Evaluators are generic: ``x`` may be a float, a numpy array, a
``fractions.Fraction`` or a :class:`~vietecheb.bigfix.BigFixed`. Anything
supporting ``+``, ``-``, ``*`` and multiplication by a Python ``int`` works.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bigfix import BigFixed

__all__ = [
    "ChebKind",
    "ChebCoeffVector",
    "ZeroArgumentError",
    "DegreeCapError",
    "MAX_COEFF_DEGREE",
    "eval_t_recurrence",
    "eval_t_closed_form",
    "eval_u_recurrence",
    "sum_odd_t",
    "eval_u_shifted",
    "sum_odd_t_shifted",
    "coeffs",
    "coeffs_t",
    "coeffs_u",
    "eval_coeffs",
]

MAX_COEFF_DEGREE = 1 << 20


class ZeroArgumentError(ValueError):
    pass


class DegreeCapError(ValueError):
    pass


class ChebKind(enum.Enum):
    FIRST = "T"
    SECOND = "U"


@dataclass(frozen=True)
class ChebCoeffVector:
    """Exact monomial coefficients; ``coeffs[k]`` multiplies ``x**k``."""

    kind: ChebKind
    degree: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.degree + 1:
            raise ValueError("coefficient vector length must be degree + 1")

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def scaled_down(self, divisor: int) -> tuple[int, ...]:
        """Exact integer division of every coefficient by ``divisor``."""
        if any(c % divisor for c in self.coeffs):
            raise ValueError(f"coefficients are not all divisible by {divisor}")
        return tuple(c // divisor for c in self.coeffs)

    def __call__(self, x):
        return eval_coeffs(self.coeffs, x)


def _one_like(x):
    if isinstance(x, BigFixed):
        return BigFixed.one(x.frac_bits)
    return x * 0 + 1


def _check_degree(m: int) -> None:
    if m < 0:
        raise ValueError(f"degree must be non-negative, got {m}")


def eval_t_recurrence(m: int, x):
    """T_m(x) by the three-term recurrence ``T_k = 2x T_{k-1} - T_{k-2}``."""
    _check_degree(m)
    prev, cur = _one_like(x), x
    if m == 0:
        return prev
    two_x = 2 * x
    for _ in range(m - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def eval_u_recurrence(m: int, x):
    """U_m(x) by the same recurrence started from ``U_0 = 1``, ``U_1 = 2x``."""
    _check_degree(m)
    prev = _one_like(x)
    if m == 0:
        return prev
    two_x = 2 * x
    cur = two_x
    for _ in range(m - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def _any_zero(x) -> bool:
    if isinstance(x, np.ndarray):
        return bool(np.any(x == 0))
    return x == 0


def eval_t_closed_form(m: int, x):
    """T_m(x) from the binomial identity

        T_m(x) = x**m * sum_{n=0}^{m//2} C(m, 2n) (1 - x**-2)**n

    Undefined at ``x == 0`` for ``m >= 1``; use :func:`eval_t_recurrence`
    there.
    """
    _check_degree(m)
    if m == 0:
        return _one_like(x)
    if _any_zero(x):
        raise ZeroArgumentError("closed form contains x**-2; x must be nonzero")
    one = _one_like(x)
    w = one - one / (x * x)
    power = one
    total = one * 0
    for n in range(m // 2 + 1):
        total = total + math.comb(m, 2 * n) * power
        power = power * w
    return (x**m) * total


def sum_odd_t(K: int, x):
    """``2 * sum(T_k(x) for odd k <= K)`` in one recurrence pass.

    Equals U_K(x) for odd K.
    """
    if K < 1 or K % 2 == 0:
        raise ValueError(f"K must be an odd positive integer, got {K}")
    prev, cur = _one_like(x), x
    two_x = 2 * x
    acc = cur
    for k in range(2, K + 1):
        prev, cur = cur, two_x * cur - prev
        if k & 1:
            acc = acc + cur
    return 2 * acc


def eval_u_shifted(m: int, d):
    """U_m(1 + d) by the recurrence in difference form.

    Carries ``U_k - U_{k-1}`` and updates it by ``2 d U_k``. When ``x`` is
    close to 1 and ``d = x - 1`` is known to full relative accuracy this
    avoids the ~m**2 amplification of the rounding already present in ``x``.
    """
    _check_degree(m)
    u = _one_like(d)
    if m == 0:
        return u
    two_d = 2 * d
    delta = u + two_d
    u = u + delta
    for _ in range(m - 1):
        delta = delta + two_d * u
        u = u + delta
    return u


def sum_odd_t_shifted(K: int, d):
    """:func:`sum_odd_t` at ``x = 1 + d`` using the difference form."""
    if K < 1 or K % 2 == 0:
        raise ValueError(f"K must be an odd positive integer, got {K}")
    two_d = 2 * d
    delta = d
    t = _one_like(d) + d
    acc = t
    for k in range(2, K + 1):
        delta = delta + two_d * t
        t = t + delta
        if k & 1:
            acc = acc + t
    return 2 * acc


def _poly_recurrence(p0: list[int], p1: list[int], m: int) -> list[int]:
    if m == 0:
        return p0
    prev, cur = p0, p1
    for _ in range(m - 1):
        nxt = [0] + [2 * c for c in cur]
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


def coeffs(kind: ChebKind | str, m: int) -> ChebCoeffVector:
    """Exact integer monomial coefficients of T_m or U_m."""
    kind = ChebKind(kind) if not isinstance(kind, ChebKind) else kind
    _check_degree(m)
    if m > MAX_COEFF_DEGREE:
        raise DegreeCapError(f"degree {m} exceeds the cap {MAX_COEFF_DEGREE}")
    p1 = [0, 1] if kind is ChebKind.FIRST else [0, 2]
    return ChebCoeffVector(kind, m, tuple(_poly_recurrence([1], p1, m)))


def coeffs_t(m: int) -> ChebCoeffVector:
    return coeffs(ChebKind.FIRST, m)


def coeffs_u(m: int) -> ChebCoeffVector:
    return coeffs(ChebKind.SECOND, m)


def eval_coeffs(c, x):
    """Horner evaluation of a monomial coefficient sequence."""
    acc = _one_like(x) * 0
    for ck in reversed(c):
        acc = acc * x + ck
    return acc
