"""The nested-radical tower a_1 = sqrt(2), a_m = sqrt(2 + a_{m-1}).

Each a_m is twice a half-angle cosine: ``a_m / 2 == cos(pi / 2**(m+1))``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bigfix
from .bigfix import BigFixed

__all__ = ["RadicalSequence", "generate"]


@dataclass(frozen=True)
class RadicalSequence:
    """Materialized values a_1..a_M at one working precision.

    Every square root floors, so each step adds at most one ulp of error and
    ``a_M`` is within ``M`` ulp of the true tower.
    """

    frac_bits: int
    values: tuple[BigFixed, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, m: int) -> BigFixed:
        """1-based access: ``seq[m]`` is a_m."""
        if not 1 <= m <= len(self.values):
            raise IndexError(f"a_{m} outside 1..{len(self.values)}")
        return self.values[m - 1]

    @property
    def last(self) -> BigFixed:
        return self.values[-1]

    def cosines(self) -> tuple[BigFixed, ...]:
        """a_m / 2 for every m, i.e. cos(pi / 2**(m+1)) (floored)."""
        return tuple(a.half() for a in self.values)


def generate(M: int, frac_bits: int) -> RadicalSequence:
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")
    if frac_bits < 16:
        raise ValueError(f"frac_bits must be >= 16, got {frac_bits}")
    two = BigFixed.from_int(2, frac_bits)
    a = bigfix.sqrt(two)
    values = [a]
    for _ in range(M - 1):
        a = bigfix.sqrt(two + a)
        values.append(a)
    return RadicalSequence(frac_bits, tuple(values))
