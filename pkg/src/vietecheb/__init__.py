"""Viete's product for pi, its Chebyshev rewritings, and sinc approximations.

Modules
-------
bigfix       arbitrary-precision fixed-point reals
chebyshev    T_m / U_m evaluation and exact coefficients
radicals     the nested-radical tower sqrt(2 + sqrt(2 + ...))
pi_engines   pi by product, T-sum, single U, and a Machin reference
sinc_approx  double-precision sinc approximants and sup-norm error
cli          the ``vietecheb`` command
"""

from .bigfix import BigFixed, from_decimal, to_decimal
from .chebyshev import (
    ChebKind,
    coeffs,
    eval_t_closed_form,
    eval_t_recurrence,
    eval_u_recurrence,
    sum_odd_t,
)
from .pi_engines import (
    PiMethod,
    convergence_sweep,
    pi_cheb_t_sum,
    pi_cheb_u,
    pi_machin_reference,
    pi_viete_product,
)
from .radicals import RadicalSequence, generate
from .sinc_approx import SincMethod, measure_sup_error, sinc_exact

__version__ = "0.1.0"
