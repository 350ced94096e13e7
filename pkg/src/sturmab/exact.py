"""Exact arithmetic in real quadratic fields Q(sqrt d).

A value is stored as ``(p + q*sqrt(d)) / r`` with integer ``p, q``, positive
``r`` and square-free ``d``. Every ordering decision (signs, floors,
fractional parts, rounding) is made with integer arithmetic only.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from numbers import Rational
from typing import Union

__all__ = [
    "FieldMismatchError",
    "QuadraticNumber",
    "Exact",
    "as_quadratic",
    "qsign",
    "qfloor",
    "floor_pq",
    "sign_pq",
    "qfrac",
    "approx_decimal",
    "parse_value",
    "format_value",
    "PHI",
    "SQRT5",
]


class FieldMismatchError(ValueError):
    """Raised when two irrational operands live in different fields."""


def _square_free(d: int) -> tuple[int, int]:
    """Split ``d`` as ``s*s*k`` with ``k`` square-free; return ``(s, k)``."""
    if d <= 0:
        raise ValueError(f"radicand must be positive, got {d}")
    s, k, f = 1, d, 2
    while f * f <= k:
        while k % (f * f) == 0:
            k //= f * f
            s *= f
        f += 1
    return s, k


def sign_pq(p: int, q: int, d: int) -> int:
    """Sign of ``p + q*sqrt(d)`` for non-square ``d`` (or ``q == 0``)."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return 1 if q > 0 else -1
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    # opposite signs: compare magnitudes p^2 and q^2 d
    diff = p * p - q * q * d
    if diff == 0:
        return 0
    return (1 if diff > 0 else -1) * (1 if p > 0 else -1)


class QuadraticNumber:
    """Immutable element ``(p + q*sqrt(d)) / r`` of Q(sqrt d)."""

    __slots__ = ("_p", "_q", "_r", "_d")

    def __init__(self, p: int, q: int = 0, r: int = 1, d: int = 1):
        p, q, r, d = int(p), int(q), int(r), int(d)
        if r == 0:
            raise ZeroDivisionError("denominator r must be non-zero")
        if q != 0:
            s, d = _square_free(d)
            q *= s
            if d == 1:
                p, q = p + q, 0
        if q == 0:
            d = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        self._p, self._q, self._r, self._d = p, q, r, d

    @classmethod
    def _raw(cls, p: int, q: int, r: int, d: int) -> "QuadraticNumber":
        # d already square-free; only sign/gcd normalisation needed
        obj = cls.__new__(cls)
        if q == 0:
            d = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(p, q), r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        obj._p, obj._q, obj._r, obj._d = p, q, r, d
        return obj

    @classmethod
    def rational(cls, n: int, m: int = 1) -> "QuadraticNumber":
        return cls(n, 0, m)

    @classmethod
    def sqrt(cls, d: int) -> "QuadraticNumber":
        return cls(0, 1, 1, d)

    @property
    def p(self) -> int:
        return self._p

    @property
    def q(self) -> int:
        return self._q

    @property
    def r(self) -> int:
        return self._r

    @property
    def d(self) -> int:
        return self._d

    @property
    def is_rational(self) -> bool:
        return self._q == 0

    def as_fraction(self) -> Fraction:
        if self._q:
            raise ValueError(f"{self!r} is irrational")
        return Fraction(self._p, self._r)

    # -- arithmetic -------------------------------------------------------

    def _common_d(self, other: "QuadraticNumber") -> int:
        if self._q == 0:
            return other._d
        if other._q == 0 or other._d == self._d:
            return self._d
        raise FieldMismatchError(
            f"cannot combine values from Q(sqrt {self._d}) and Q(sqrt {other._d})"
        )

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        r1, r2 = self._r, other._r
        return QuadraticNumber._raw(
            self._p * r2 + other._p * r1, self._q * r2 + other._q * r1, r1 * r2, d
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber._raw(-self._p, -self._q, self._r, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        d = self._common_d(other)
        p1, q1, p2, q2 = self._p, self._q, other._p, other._q
        return QuadraticNumber._raw(
            p1 * p2 + q1 * q2 * d, p1 * q2 + p2 * q1, self._r * other._r, d
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticNumber":
        p, q, r, d = self._p, self._q, self._r, self._d
        norm = p * p - q * q * d
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return QuadraticNumber._raw(r * p, -r * q, norm, d)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        self._common_d(other)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.reciprocal()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.reciprocal()
        result = QuadraticNumber(1)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __abs__(self):
        return -self if qsign(self) < 0 else self

    # -- ordering ---------------------------------------------------------

    def _cmp(self, other: "QuadraticNumber") -> int:
        d = self._common_d(other)
        r1, r2 = self._r, other._r
        return sign_pq(self._p * r2 - other._p * r1, self._q * r2 - other._q * r1, d)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return (self._p, self._q, self._r, self._d) == (
            other._p, other._q, other._r, other._d,
        )

    def __hash__(self):
        if self._q == 0:
            return hash(Fraction(self._p, self._r))
        return hash((self._p, self._q, self._r, self._d))

    def __lt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) >= 0

    def __bool__(self):
        return self._p != 0 or self._q != 0

    def __floor__(self):
        return qfloor(self)

    def __float__(self):
        # display only; never used to decide anything
        return (self._p + self._q * self._d ** 0.5) / self._r

    def __repr__(self):
        return f"QuadraticNumber({self._p}, {self._q}, {self._r}, {self._d})"

    def __str__(self):
        if self._q == 0:
            return str(self._p) if self._r == 1 else f"{self._p}/{self._r}"
        rad = f"√{self._d}" if abs(self._q) == 1 else f"{abs(self._q)}√{self._d}"
        if self._p == 0:
            num = rad if self._q > 0 else f"-{rad}"
        else:
            num = f"{self._p}{'+' if self._q > 0 else '-'}{rad}"
        if self._r == 1:
            return num
        return f"({num})/{self._r}"


Exact = Union[QuadraticNumber, int, Fraction]


def _coerce(x):
    if isinstance(x, QuadraticNumber):
        return x
    if isinstance(x, int):
        return QuadraticNumber._raw(x, 0, 1, 1)
    if isinstance(x, Rational):
        return QuadraticNumber._raw(int(x.numerator), 0, int(x.denominator), 1)
    return NotImplemented


def as_quadratic(x: Exact) -> QuadraticNumber:
    """Coerce an int, Fraction or QuadraticNumber to a QuadraticNumber."""
    y = _coerce(x)
    if y is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact quadratic value")
    return y


def qsign(x: Exact) -> int:
    """Exact sign of ``x`` in {-1, 0, 1}."""
    x = as_quadratic(x)
    return sign_pq(x.p, x.q, x.d)


def floor_pq(p: int, q: int, r: int, d: int) -> int:
    """``floor((p + q*sqrt(d)) / r)`` for ``r > 0`` and non-square ``d`` (or ``q == 0``)."""
    if q == 0:
        return p // r
    s = isqrt(q * q * d)  # s < |q| sqrt(d) < s + 1
    k = (p + s) // r if q > 0 else (p - s - 1) // r
    # seed is off by at most one in either direction
    while sign_pq(p - k * r, q, d) < 0:
        k -= 1
    while sign_pq(p - (k + 1) * r, q, d) >= 0:
        k += 1
    return k


def qfloor(x: Exact) -> int:
    """Largest integer ``k`` with ``k <= x``."""
    x = as_quadratic(x)
    return floor_pq(x.p, x.q, x.r, x.d)


def qfrac(x: Exact) -> QuadraticNumber:
    """Fractional part ``x - floor(x)``, always in [0, 1)."""
    x = as_quadratic(x)
    return x - qfloor(x)


def approx_decimal(x: Exact, digits: int) -> str:
    """Render ``x`` with ``digits`` fractional digits, correctly rounded.

    Rounding is to nearest; exact ties (rationals only) go to the even
    neighbour.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scaled = as_quadratic(x) * (10 ** digits)
    n = qfloor(scaled)
    s = qsign(scaled - n - Fraction(1, 2))
    if s > 0 or (s == 0 and n % 2 == 1):
        n += 1
    neg = n < 0
    whole, part = divmod(abs(n), 10 ** digits)
    return f"{'-' if neg else ''}{whole}.{part:0{digits}d}"


def parse_value(text: str) -> QuadraticNumber:
    """Parse ``quad:p,q,r,d``, ``ratio:n/m``, or a bare ``n`` / ``n/m``."""
    text = text.strip()
    try:
        if text.startswith("quad:"):
            parts = [int(s) for s in text[5:].split(",")]
            if len(parts) != 4:
                raise ValueError
            p, q, r, d = parts
            if r == 0 or d <= 0:
                raise ValueError
            return QuadraticNumber(p, q, r, d)
        if text.startswith("ratio:"):
            text = text[6:]
        num, _, den = text.partition("/")
        return QuadraticNumber.rational(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed exact value {text!r}") from None


def format_value(x: Exact) -> str:
    """Inverse of :func:`parse_value`, always in ``quad:`` form."""
    x = as_quadratic(x)
    return f"quad:{x.p},{x.q},{x.r},{x.d}"


SQRT5 = QuadraticNumber.sqrt(5)
PHI = QuadraticNumber(1, 1, 2, 5)
