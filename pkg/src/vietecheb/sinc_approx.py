"""Double-precision sinc approximations built from the cosine product.

All approximants accept a scalar or a numpy array of arguments (radians) and
return the same shape. The four families and their truncation parameter:

============  ====================================================  =========
method        formula                                               parameter
============  ====================================================  =========
product       prod_{m=1}^{M} cos(t / 2**m)                          M
cos-sum       2**-(M-1) sum_{m=1}^{2**(M-1)} cos((2m-1) t / 2**M)    M
t-sum         (1/L) sum_{l=1}^{L} T_{2l-1}(cos(t / 2L))              L
u             (1/N) U_{N-1}(cos(t / N))                              N
============  ====================================================  =========
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import chebyshev

__all__ = [
    "SincMethod",
    "SincErrorReport",
    "SincCapError",
    "COS_SUM_MAX_M",
    "sinc_exact",
    "sinc_cos_product",
    "sinc_cos_sum",
    "sinc_t_sum",
    "sinc_u",
    "approximate",
    "measure_sup_error",
]

COS_SUM_MAX_M = 26
_TAYLOR_SWITCH = 1e-8
# cos-sum terms are accumulated in blocks to bound memory on large grids
_BLOCK_ELEMENTS = 1 << 22


class SincCapError(ValueError):
    pass


class SincMethod(enum.Enum):
    COS_PRODUCT = "product"
    COS_SUM = "cos-sum"
    T_SUM = "t-sum"
    U_SINGLE = "u"


@dataclass(frozen=True)
class SincErrorReport:
    method: SincMethod
    parameter: int
    t_lo: float
    t_hi: float
    grid_points: int
    sup_error: float
    argmax_t: float


def _as_array(t):
    arr = np.asarray(t, dtype=float)
    return arr, arr.ndim == 0


def _finish(values, scalar):
    return float(values) if scalar else values


def sinc_exact(t):
    """sin(t)/t with sinc(0) = 1; ``1 - t**2/6`` below ``|t| < 1e-8``."""
    arr, scalar = _as_array(t)
    small = np.abs(arr) < _TAYLOR_SWITCH
    safe = np.where(small, 1.0, arr)
    out = np.where(small, 1.0 - arr * arr / 6.0, np.sin(safe) / safe)
    return _finish(out, scalar)


def _cos_minus_one(theta):
    # cos(theta) - 1 without cancellation; the Chebyshev passes below run on
    # this shifted argument because their arguments sit just below 1
    s = np.sin(theta / 2.0)
    return -2.0 * s * s


def _positive(name, value):
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")


def sinc_cos_product(t, M: int):
    _positive("M", M)
    arr, scalar = _as_array(t)
    out = np.ones_like(arr)
    for m in range(1, M + 1):
        out = out * np.cos(arr / 2.0**m)
    return _finish(out, scalar)


def sinc_cos_sum(t, M: int):
    """Incomplete cosine expansion with 2**(M-1) terms (M <= 26)."""
    _positive("M", M)
    if M > COS_SUM_MAX_M:
        raise SincCapError(f"M={M} exceeds the cap of {COS_SUM_MAX_M}")
    arr, scalar = _as_array(t)
    flat = arr.reshape(-1)
    n_terms = 1 << (M - 1)
    step = flat / 2.0**M
    total = np.zeros_like(flat)
    block = max(1, _BLOCK_ELEMENTS // max(flat.size, 1))
    for start in range(0, n_terms, block):
        odd = 2.0 * np.arange(start + 1, min(start + block, n_terms) + 1) - 1.0
        total += np.cos(np.multiply.outer(step, odd)).sum(axis=1)
    out = (total / n_terms).reshape(arr.shape)
    return _finish(out, scalar)


def sinc_t_sum(t, L: int):
    """Average of the first L odd-degree T polynomials at cos(t / 2L)."""
    _positive("L", L)
    arr, scalar = _as_array(t)
    out = chebyshev.sum_odd_t_shifted(2 * L - 1, _cos_minus_one(arr / (2.0 * L)))
    out = out / (2.0 * L)
    return _finish(out, scalar)


def sinc_u(t, N: int):
    """(1/N) U_{N-1}(cos(t/N))."""
    _positive("N", N)
    arr, scalar = _as_array(t)
    out = chebyshev.eval_u_shifted(N - 1, _cos_minus_one(arr / N)) / N
    return _finish(out, scalar)


_APPROX = {
    SincMethod.COS_PRODUCT: sinc_cos_product,
    SincMethod.COS_SUM: sinc_cos_sum,
    SincMethod.T_SUM: sinc_t_sum,
    SincMethod.U_SINGLE: sinc_u,
}


def approximate(method: SincMethod | str, t, parameter: int):
    return _APPROX[SincMethod(method)](t, parameter)


def measure_sup_error(
    method: SincMethod | str,
    parameter: int,
    t_range: tuple[float, float],
    grid_points: int,
) -> SincErrorReport:
    """Max |approx - sinc| over a closed uniform grid.

    Ties resolve to the smallest t.
    """
    method = SincMethod(method)
    t_lo, t_hi = float(t_range[0]), float(t_range[1])
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    if not t_lo < t_hi:
        raise ValueError(f"empty range [{t_lo}, {t_hi}]")
    grid = np.linspace(t_lo, t_hi, grid_points)
    err = np.abs(approximate(method, grid, parameter) - sinc_exact(grid))
    i = int(np.argmax(err))
    return SincErrorReport(
        method=method,
        parameter=parameter,
        t_lo=t_lo,
        t_hi=t_hi,
        grid_points=grid_points,
        sup_error=float(err[i]),
        argmax_t=float(grid[i]),
    )
