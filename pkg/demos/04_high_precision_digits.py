"""
A thousand digits of pi
=======================

Pick enough radicals and enough fractional bits and the product gives
pi to any number of digits. The result is compared with Machin's
arctan formula.
"""

import time

from vietecheb import pi_machin_reference, pi_viete_product
from vietecheb.pi_engines import viete_sizing

D = 1000
M, frac_bits = viete_sizing(D)
print(f"{D} digits need M={M} radicals at {frac_bits} fractional bits")

start = time.perf_counter()
viete = pi_viete_product(M, frac_bits).digits(D)
elapsed = time.perf_counter() - start

machin = pi_machin_reference(D).digits(D)
agree = sum(1 for a, b in zip(viete[2:], machin[2:]) if a == b)
print(f"{agree}/{D} digits agree with Machin, {elapsed:.2f} s")
print(viete[:62] + " ...")
print("... " + viete[-40:])
