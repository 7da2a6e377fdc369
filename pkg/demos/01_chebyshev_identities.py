"""
Chebyshev polynomials and the odd-T sum
=======================================

T_m(cos th) = cos(m th), and a sum of odd-degree T's collapses to a
single U polynomial. Both facts are checked here numerically and with
exact integer coefficients.
"""

import numpy as np

from vietecheb import ChebKind, coeffs, eval_t_recurrence, eval_u_recurrence, sum_odd_t

###############################################################################
# T_m(cos th) against cos(m th) on a grid of angles.

theta = np.linspace(0, np.pi, 1000)
for m in (1, 5, 17, 64):
    dev = np.max(np.abs(eval_t_recurrence(m, np.cos(theta)) - np.cos(m * theta)))
    print(f"T_{m:<2d}  max |T_m(cos th) - cos(m th)| = {dev:.2e}")

###############################################################################
# Integer coefficients. T_2 = 2x^2 - 1, lowest degree first.

print(coeffs(ChebKind.FIRST, 2).coeffs)

###############################################################################
# U_15 has leading coefficient 2^15. Dividing by 16 gives the polynomial
# used later for sinc(t) with c = cos(t/16).

u15 = coeffs(ChebKind.SECOND, 15).scaled_down(16)
terms = [f"{c:+d} c^{k}" for k, c in enumerate(u15) if c][::-1]
print("U_15(c) / 16 =", " ".join(terms))

###############################################################################
# 2 (T_1 + T_3 + ... + T_K) = U_K, first with exact integers...

K = 15
total = [0] * (K + 1)
for k in range(1, K + 1, 2):
    for i, c in enumerate(coeffs(ChebKind.FIRST, k).coeffs):
        total[i] += 2 * c
print("integer identity holds:", tuple(total) == coeffs(ChebKind.SECOND, K).coeffs)

###############################################################################
# ...then in double precision.

x = np.linspace(-1, 1, 2001)
dev = np.max(np.abs(sum_odd_t(K, x) - eval_u_recurrence(K, x)))
print(f"max |2 sum T_odd - U_{K}| on [-1, 1] = {dev:.2e}")
