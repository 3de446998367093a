"""Exact arithmetic in the real quadratic field Q(sqrt 2).

An element ``p/q + (r/q)*sqrt(2)`` is stored as three Python integers
``(p, r, q)`` with ``q > 0`` and ``gcd(p, r, q) == 1``, so equal field
elements have identical representations.  The rational and radical parts are
available as :class:`fractions.Fraction` objects.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from numbers import Rational as _RationalABC

__all__ = ["Scalar", "ZERO", "ONE", "SQRT2", "as_scalar", "parse_scalar"]


def _make(p: int, r: int, q: int) -> "Scalar":
    g = gcd(gcd(p, r), q)
    if g != 1:
        p //= g
        r //= g
        q //= g
    obj = object.__new__(Scalar)
    obj._p = p
    obj._r = r
    obj._q = q
    return obj


class Scalar:
    """An element ``a + b*sqrt(2)`` with ``a``, ``b`` rational."""

    __slots__ = ("_p", "_r", "_q")

    def __new__(cls, rational=0, radical=0):
        a = Fraction(rational)
        b = Fraction(radical)
        q = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        return _make(a.numerator * (q // a.denominator), b.numerator * (q // b.denominator), q)

    def __reduce__(self):
        return (Scalar, (self.rational, self.radical))

    @property
    def rational(self) -> Fraction:
        return Fraction(self._p, self._q)

    @property
    def radical(self) -> Fraction:
        return Fraction(self._r, self._q)

    # -- predicates -----------------------------------------------------
    def __bool__(self) -> bool:
        return self._p != 0 or self._r != 0

    def is_rational(self) -> bool:
        return self._r == 0

    def __eq__(self, other) -> bool:
        if type(other) is Scalar:
            return self._p == other._p and self._r == other._r and self._q == other._q
        if isinstance(other, (int, _RationalABC)):
            return self._r == 0 and Fraction(self._p, self._q) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._r == 0:
            return hash(Fraction(self._p, self._q))
        return hash((self._p, self._r, self._q))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other) -> "Scalar":
        if type(other) is not Scalar:
            other = as_scalar(other)
        q1, q2 = self._q, other._q
        if q1 == q2:
            return _make(self._p + other._p, self._r + other._r, q1)
        return _make(self._p * q2 + other._p * q1, self._r * q2 + other._r * q1, q1 * q2)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        if type(other) is not Scalar:
            other = as_scalar(other)
        q1, q2 = self._q, other._q
        if q1 == q2:
            return _make(self._p - other._p, self._r - other._r, q1)
        return _make(self._p * q2 - other._p * q1, self._r * q2 - other._r * q1, q1 * q2)

    def __rsub__(self, other) -> "Scalar":
        return as_scalar(other) - self

    def __neg__(self) -> "Scalar":
        obj = object.__new__(Scalar)
        obj._p = -self._p
        obj._r = -self._r
        obj._q = self._q
        return obj

    def __mul__(self, other) -> "Scalar":
        if type(other) is not Scalar:
            other = as_scalar(other)
        a, b, q1 = self._p, self._r, self._q
        c, d, q2 = other._p, other._r, other._q
        if not b and not d:
            return _make(a * c, 0, q1 * q2)
        return _make(a * c + 2 * b * d, a * d + b * c, q1 * q2)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``a**2 - 2*b**2``; zero only for the zero element."""
        return Fraction(self._p * self._p - 2 * self._r * self._r, self._q * self._q)

    def conjugate(self) -> "Scalar":
        """Galois conjugate ``a - b*sqrt(2)``."""
        return _make(self._p, -self._r, self._q)

    def inverse(self) -> "Scalar":
        # ((p + r rt2)/q)^-1 = q (p - r rt2) / (p^2 - 2 r^2)
        p, r, q = self._p, self._r, self._q
        n = p * p - 2 * r * r
        if n == 0:
            raise ZeroDivisionError("inverse of zero Scalar")
        if n < 0:
            return _make(-q * p, q * r, -n)
        return _make(q * p, -q * r, n)

    def __truediv__(self, other) -> "Scalar":
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other) -> "Scalar":
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- text -----------------------------------------------------------
    def __str__(self) -> str:
        if not self._r:
            return _frac_text(self.rational)
        return f"({_frac_text(self.rational)} + {_frac_text(self.radical)}*rt2)"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def _frac_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def as_scalar(x) -> Scalar:
    if type(x) is Scalar:
        return x
    if isinstance(x, int):
        return _make(int(x), 0, 1)
    if isinstance(x, _RationalABC):
        return _make(x.numerator, 0, x.denominator)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Scalar")


_RAT = r"-?\d+(?:/\d+)?"
_RADICAL_FORM = re.compile(rf"^\(\s*({_RAT})\s*\+\s*({_RAT})\s*\*\s*rt2\s*\)$")
_RATIONAL_FORM = re.compile(rf"^({_RAT})$")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"p/q"`` or ``"(p/q + r/s*rt2)"`` (bare integers are accepted too)."""
    s = text.strip()
    m = _RATIONAL_FORM.match(s)
    if m:
        return Scalar(Fraction(m.group(1)))
    m = _RADICAL_FORM.match(s)
    if m:
        return Scalar(Fraction(m.group(1)), Fraction(m.group(2)))
    raise ValueError(f"not a scalar: {text!r}")


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)
