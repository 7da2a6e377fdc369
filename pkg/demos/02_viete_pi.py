"""
Pi from nested radicals
=======================

a_1 = sqrt(2), a_m = sqrt(2 + a_{m-1}). The product of a_m / 2 tends to
2 / pi. The same truncated product can also be written as a sum of
Chebyshev T's or as one U polynomial, and all three routes give the
same bits.
"""

import math

from vietecheb import PiMethod, convergence_sweep, generate, pi_cheb_t_sum, pi_cheb_u, pi_viete_product

###############################################################################
# The radical tower at 128 fractional bits.

seq = generate(6, 128)
for m in range(1, 7):
    print(f"a_{m} = {float(seq[m]):.15f}")

###############################################################################
# Three routes to the same estimate.

M = 12
for engine in (pi_viete_product, pi_cheb_t_sum, pi_cheb_u):
    r = engine(M, 256)
    print(f"{r.method.value:9s} M={M}  {r.digits(20)}  matched={r.matched_decimal_digits}")

###############################################################################
# Each extra radical cuts the error by 4, close to pi^2 / (6 * 4^(M+1)).

for r in convergence_sweep(PiMethod.VIETE_PRODUCT, range(5, 21, 3), 256):
    model = math.pi**2 / (6 * 4 ** (r.M + 1))
    print(f"M={r.M:2d}  rel_error={float(r.rel_error):.3e}  ratio to model={float(r.rel_error) / model:.5f}")
