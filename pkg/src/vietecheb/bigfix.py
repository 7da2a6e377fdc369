"""Arbitrary-precision binary fixed-point reals.

A :class:`BigFixed` is ``mantissa / 2**frac_bits`` with an unbounded integer
mantissa. Values are immutable. Arithmetic between two ``BigFixed`` operands
requires equal ``frac_bits``; Python ``int`` operands are exact and accepted
anywhere. ``mul``, ``div`` and ``sqrt`` round toward negative infinity.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

__all__ = [
    "BigFixed",
    "BigFixedError",
    "PrecisionMismatchError",
    "NegativeSqrtError",
    "MalformedLiteralError",
    "PrecisionExceededError",
    "add",
    "mul",
    "div",
    "sqrt",
    "isqrt",
    "from_decimal",
    "to_decimal",
    "decimal_budget",
]

_LOG10_2 = math.log10(2)
_LITERAL = re.compile(r"([+-]?)(\d*)(?:\.(\d*))?")


class BigFixedError(ValueError):
    pass


class PrecisionMismatchError(BigFixedError):
    pass


class NegativeSqrtError(BigFixedError):
    pass


class MalformedLiteralError(BigFixedError):
    pass


class PrecisionExceededError(BigFixedError):
    pass


def isqrt(n: int) -> int:
    """Floor square root of a non-negative integer by Newton iteration.

    The starting guess ``2**ceil(bits/2)`` is never below the root, so the
    iterates decrease monotonically and the loop stops at the first
    non-decreasing step.
    """
    if n < 0:
        raise NegativeSqrtError("square root of a negative integer")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) >> 1
        if y >= x:
            return x
        x = y


def decimal_budget(frac_bits: int) -> int:
    """Largest number of decimal places ``frac_bits`` binary places justify."""
    return math.floor(frac_bits * _LOG10_2)


class BigFixed:
    __slots__ = ("mantissa", "frac_bits")

    mantissa: int
    frac_bits: int

    def __init__(self, mantissa: int, frac_bits: int):
        if frac_bits < 1:
            raise BigFixedError(f"frac_bits must be >= 1, got {frac_bits}")
        object.__setattr__(self, "mantissa", int(mantissa))
        object.__setattr__(self, "frac_bits", int(frac_bits))

    @classmethod
    def _raw(cls, mantissa: int, frac_bits: int) -> BigFixed:
        # skips validation; frac_bits comes from an existing operand
        obj = object.__new__(cls)
        object.__setattr__(obj, "mantissa", mantissa)
        object.__setattr__(obj, "frac_bits", frac_bits)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("BigFixed is immutable")

    def __reduce__(self):
        return (BigFixed, (self.mantissa, self.frac_bits))

    # construction / conversion

    @classmethod
    def from_int(cls, value: int, frac_bits: int) -> BigFixed:
        return cls(int(value) << frac_bits, frac_bits)

    @classmethod
    def from_fraction(cls, value, frac_bits: int) -> BigFixed:
        """Floor-rounded conversion of any rational (``int``, ``Fraction``)."""
        q = Fraction(value)
        return cls((q.numerator << frac_bits) // q.denominator, frac_bits)

    @classmethod
    def from_float(cls, value: float, frac_bits: int) -> BigFixed:
        return cls.from_fraction(Fraction(value), frac_bits)

    @classmethod
    def one(cls, frac_bits: int) -> BigFixed:
        return cls(1 << frac_bits, frac_bits)

    @classmethod
    def zero(cls, frac_bits: int) -> BigFixed:
        return cls(0, frac_bits)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.frac_bits)

    def __float__(self) -> float:
        # Fraction -> float is correctly rounded even for huge mantissas
        return float(self.to_fraction())

    def ulp(self) -> BigFixed:
        return BigFixed._raw(1, self.frac_bits)

    def rescale(self, frac_bits: int) -> BigFixed:
        """Explicit precision change; narrowing floors."""
        if frac_bits < 1:
            raise BigFixedError(f"frac_bits must be >= 1, got {frac_bits}")
        shift = frac_bits - self.frac_bits
        if shift >= 0:
            return BigFixed._raw(self.mantissa << shift, frac_bits)
        return BigFixed._raw(self.mantissa >> -shift, frac_bits)

    def half(self) -> BigFixed:
        return BigFixed._raw(self.mantissa >> 1, self.frac_bits)

    def to_decimal(self, digits: int) -> str:
        return to_decimal(self, digits)

    def sqrt(self) -> BigFixed:
        return sqrt(self)

    def is_zero(self) -> bool:
        return self.mantissa == 0

    # operand coercion

    def _mantissa_of(self, other) -> int:
        if isinstance(other, BigFixed):
            if other.frac_bits != self.frac_bits:
                raise PrecisionMismatchError(
                    f"frac_bits differ: {self.frac_bits} vs {other.frac_bits}"
                )
            return other.mantissa
        if isinstance(other, int):
            return other << self.frac_bits
        raise TypeError(f"unsupported operand type {type(other).__name__}")

    # arithmetic

    def __add__(self, other):
        try:
            m = self._mantissa_of(other)
        except TypeError:
            return NotImplemented
        return BigFixed._raw(self.mantissa + m, self.frac_bits)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            m = self._mantissa_of(other)
        except TypeError:
            return NotImplemented
        return BigFixed._raw(self.mantissa - m, self.frac_bits)

    def __rsub__(self, other):
        try:
            m = self._mantissa_of(other)
        except TypeError:
            return NotImplemented
        return BigFixed._raw(m - self.mantissa, self.frac_bits)

    def __neg__(self):
        return BigFixed._raw(-self.mantissa, self.frac_bits)

    def __pos__(self):
        return self

    def __abs__(self):
        return BigFixed._raw(abs(self.mantissa), self.frac_bits)

    def __mul__(self, other):
        if isinstance(other, int):
            return BigFixed._raw(self.mantissa * other, self.frac_bits)
        if isinstance(other, BigFixed):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            if other == 0:
                raise ZeroDivisionError("BigFixed division by zero")
            return BigFixed._raw(self.mantissa // other, self.frac_bits)
        if isinstance(other, BigFixed):
            return div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return div(BigFixed.from_int(other, self.frac_bits), self)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = BigFixed.one(self.frac_bits)
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            exponent >>= 1
            if exponent:
                base = mul(base, base)
        return result

    def __lshift__(self, n: int):
        return BigFixed._raw(self.mantissa << n, self.frac_bits)

    def __rshift__(self, n: int):
        return BigFixed._raw(self.mantissa >> n, self.frac_bits)

    # comparison

    def _cmp_key(self, other):
        try:
            return self._mantissa_of(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if isinstance(other, BigFixed):
            return self.frac_bits == other.frac_bits and self.mantissa == other.mantissa
        if isinstance(other, int):
            return self.mantissa == other << self.frac_bits
        return NotImplemented

    def __hash__(self):
        return hash((self.mantissa, self.frac_bits))

    def __lt__(self, other):
        m = self._cmp_key(other)
        return NotImplemented if m is NotImplemented else self.mantissa < m

    def __le__(self, other):
        m = self._cmp_key(other)
        return NotImplemented if m is NotImplemented else self.mantissa <= m

    def __gt__(self, other):
        m = self._cmp_key(other)
        return NotImplemented if m is NotImplemented else self.mantissa > m

    def __ge__(self, other):
        m = self._cmp_key(other)
        return NotImplemented if m is NotImplemented else self.mantissa >= m

    def __bool__(self):
        return self.mantissa != 0

    def __repr__(self):
        shown = min(decimal_budget(self.frac_bits), 20)
        return f"BigFixed({to_decimal(self, shown)}, frac_bits={self.frac_bits})"


def _check_same(a: BigFixed, b: BigFixed) -> int:
    if a.frac_bits != b.frac_bits:
        raise PrecisionMismatchError(f"frac_bits differ: {a.frac_bits} vs {b.frac_bits}")
    return a.frac_bits


def add(a: BigFixed, b: BigFixed) -> BigFixed:
    f = _check_same(a, b)
    return BigFixed._raw(a.mantissa + b.mantissa, f)


def mul(a: BigFixed, b: BigFixed) -> BigFixed:
    f = _check_same(a, b)
    return BigFixed._raw((a.mantissa * b.mantissa) >> f, f)


def div(a: BigFixed, b: BigFixed) -> BigFixed:
    f = _check_same(a, b)
    if b.mantissa == 0:
        raise ZeroDivisionError("BigFixed division by zero")
    return BigFixed._raw((a.mantissa << f) // b.mantissa, f)


def sqrt(a: BigFixed) -> BigFixed:
    """Floor square root: ``r*r <= a < (r + ulp)**2``."""
    if a.mantissa < 0:
        raise NegativeSqrtError("square root of a negative value")
    return BigFixed._raw(isqrt(a.mantissa << a.frac_bits), a.frac_bits)


def from_decimal(s: str, frac_bits: int) -> BigFixed:
    """Parse a signed decimal literal such as ``"-12.034"`` (floor-rounded)."""
    match = _LITERAL.fullmatch(s.strip()) if isinstance(s, str) else None
    if match is None or not (match.group(2) or match.group(3)):
        raise MalformedLiteralError(f"not a decimal literal: {s!r}")
    sign, whole, frac = match.group(1), match.group(2), match.group(3) or ""
    scaled = int((whole or "0") + frac)
    if sign == "-":
        scaled = -scaled
    return BigFixed((scaled << frac_bits) // 10 ** len(frac), frac_bits)


def to_decimal(a: BigFixed, digits: int) -> str:
    """Render ``a`` with ``digits`` decimal places, truncating toward zero."""
    if digits < 0:
        raise ValueError("digits must be non-negative")
    budget = decimal_budget(a.frac_bits)
    if digits > budget:
        raise PrecisionExceededError(
            f"{digits} decimal places requested, {a.frac_bits} frac_bits justify {budget}"
        )
    scaled = (abs(a.mantissa) * 10**digits) >> a.frac_bits
    text = str(scaled).rjust(digits + 1, "0")
    sign = "-" if a.mantissa < 0 and scaled else ""
    if digits == 0:
        return sign + text
    return f"{sign}{text[:-digits]}.{text[-digits:]}"
