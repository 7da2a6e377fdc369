"""
Approximating sinc
==================

sin(t)/t is the infinite product of cos(t / 2^m). Truncating it gives a
cosine sum, a T-sum and finally one U polynomial in cos(t/N). Here we
measure how close each gets on a fine grid.
"""

import numpy as np

from vietecheb import SincMethod, measure_sup_error, sinc_exact
from vietecheb.sinc_approx import sinc_u

###############################################################################
# U_15(cos(t/16)) / 16 on [-10, 10]. The sup error stays under 0.006.

r = measure_sup_error(SincMethod.U_SINGLE, 16, (-10, 10), 100001)
print(f"U_15 / 16: sup error {r.sup_error:.6f} at t = {r.argmax_t:.4f}")

###############################################################################
# A few sample values next to the exact function.

t = np.array([0.0, 1.0, np.pi / 2, 5.0, 9.5])
for ti, a, e in zip(t, sinc_u(t, 16), sinc_exact(t)):
    print(f"t={ti:6.3f}  approx={a: .6f}  exact={e: .6f}")

###############################################################################
# Larger N pushes the error down roughly as 1/N^2.

for N in (4, 16, 64, 256):
    err = measure_sup_error("u", N, (-10, 10), 20001).sup_error
    print(f"N={N:4d}  sup error {err:.3e}")

###############################################################################
# The truncated product with 30 factors is already exact to rounding.

print(f"product, M=30: {measure_sup_error('product', 30, (-10, 10), 1001).sup_error:.1e}")
