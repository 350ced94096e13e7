"""Fibonacci numbers, continued fractions and rational approximation checks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exact import PHI, Exact, QuadraticNumber, as_quadratic, floor_pq, qfloor, qfrac, qsign, sign_pq

__all__ = [
    "Convergent",
    "ContinuedFraction",
    "IdentityCheck",
    "fibonacci",
    "cf_expand",
    "convergents",
    "golden_identity_check",
    "best_approx_check",
    "nearest_integer",
    "hurwitz_solutions",
    "side_condition_check",
]


@lru_cache(maxsize=None)
def _fib_table(j: int) -> tuple[int, ...]:
    out = [1, 1]
    while len(out) <= j:
        out.append(out[-1] + out[-2])
    return tuple(out)


def fibonacci(j: int) -> int:
    """F_j with F_0 = F_1 = 1."""
    if j < 0:
        raise ValueError("fibonacci index must be non-negative")
    # grow the cached table in doubling steps
    size = 64
    while size <= j:
        size *= 2
    return _fib_table(size)[j]


@dataclass(frozen=True)
class ContinuedFraction:
    coefficients: tuple[int, ...]

    def __str__(self):
        head, *tail = self.coefficients
        if not tail:
            return f"[{head}]"
        return f"[{head}; {', '.join(map(str, tail))}]"

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)


@dataclass(frozen=True)
class Convergent:
    """The convergent ``numerator/denominator``; index 0 is ``a_0/1``."""

    numerator: int
    denominator: int
    index: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def cf_expand(alpha: Exact, count: int) -> ContinuedFraction:
    """First ``count`` partial quotients of ``alpha`` by the exact Gauss map.

    A rational ``alpha`` may terminate early; the finite expansion is returned.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    x = as_quadratic(alpha)
    if qsign(x) <= 0:
        raise ValueError("alpha must be positive")
    coeffs = []
    while len(coeffs) < count:
        a = qfloor(x)
        coeffs.append(a)
        rest = x - a
        if not rest:
            break
        x = rest.reciprocal()
    return ContinuedFraction(tuple(coeffs))


def convergents(alpha: Exact, count: int) -> list[Convergent]:
    out = []
    p_prev, p = 0, 1  # p_{-2}, p_{-1}
    q_prev, q = 1, 0
    for i, a in enumerate(cf_expand(alpha, count)):
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append(Convergent(p, q, i))
    return out


@dataclass(frozen=True)
class IdentityCheck:
    j: int
    lhs: QuadraticNumber
    rhs: QuadraticNumber
    equal: bool


def golden_identity_check(j: int) -> IdentityCheck:
    """Evaluate both sides of the golden-ratio convergent error identity.

    ``phi - F_{j+1}/F_j`` and ``(phi-1) - F_{j-1}/F_j`` are compared with
    ``(-1)^j / (F_j (phi F_j + F_{j-1}))``; ``equal`` needs all three to agree.
    """
    if j <= 0:
        raise ValueError("j must be positive")
    f_prev, f, f_next = fibonacci(j - 1), fibonacci(j), fibonacci(j + 1)
    lhs = PHI - Fraction(f_next, f)
    lhs_alt = (PHI - 1) - Fraction(f_prev, f)
    rhs = (-1) ** j / (f * (PHI * f + f_prev))
    return IdentityCheck(j, lhs, rhs, lhs == lhs_alt == rhs)


def nearest_integer(x: Exact) -> int:
    """Nearest integer to an irrational ``x`` (ties round up)."""
    return qfloor(as_quadratic(x) + Fraction(1, 2))


def best_approx_check(alpha: Exact, i: int) -> bool:
    """Check the best-approximation property of the ``i``-th convergent.

    True iff for every ``0 < m <= m_i`` whose closest fraction ``n/m`` differs
    from ``n_i/m_i``, ``|n_i - m_i alpha| < |n - m alpha|``.
    """
    if i <= 1:
        raise ValueError("the property is stated for i > 1")
    alpha = as_quadratic(alpha)
    conv = convergents(alpha, i + 1)
    if len(conv) <= i:
        raise ValueError(f"alpha has no convergent of index {i}")
    n_i, m_i = conv[i].numerator, conv[i].denominator
    best = abs(n_i - m_i * alpha)
    for m in range(1, m_i + 1):
        n = nearest_integer(m * alpha)
        if n * m_i == n_i * m:
            continue
        if not best < abs(n - m * alpha):
            return False
    return True


def hurwitz_solutions(alpha: Exact, A: Exact, M: int) -> list[tuple[int, int]]:
    """All coprime ``(n, m)``, ``1 <= m <= M``, with ``|n/m - alpha| < 1/(A m^2)``."""
    alpha = as_quadratic(alpha)
    A = as_quadratic(A)
    if qsign(A) <= 0:
        raise ValueError("A must be positive")
    if M < 1:
        raise ValueError("M must be >= 1")
    if not A.is_rational:
        return _hurwitz_generic(alpha, A, M)
    p, q, r, d = alpha.p, alpha.q, alpha.r, alpha.d
    a, c = A.p, A.r  # A = a / c
    out = []
    for m in range(1, M + 1):
        # |n - m alpha| < c / (a m)  <=>  a m |n r - m p - m q sqrt(d)| < c r
        spread = -(-c // (a * m))  # ceil of the radius
        centre = floor_pq(m * p, m * q, r, d)
        for n in range(centre - spread, centre + spread + 2):
            x, y = n * r - m * p, -m * q
            s = sign_pq(x, y, d)
            if s == 0:
                continue
            if sign_pq(c * r - a * m * s * x, -a * m * s * y, d) > 0 and gcd(n, m) == 1:
                out.append((n, m))
    return out


def _hurwitz_generic(alpha: QuadraticNumber, A: QuadraticNumber, M: int):
    out = []
    for m in range(1, M + 1):
        x = m * alpha
        radius = (A * m).reciprocal()
        for n in range(qfloor(x - radius), qfloor(x + radius) + 1):
            if gcd(n, m) == 1 and abs(n - x) < radius:
                out.append((n, m))
    return out


def side_condition_check(alpha: Exact, m: int) -> bool:
    """For ``1 <= i < m``: ``{i alpha} >= {m alpha}`` when ``{m alpha} < 1/2``, else ``<=``."""
    if m <= 1:
        raise ValueError("m must be > 1")
    alpha = as_quadratic(alpha)
    target = qfrac(m * alpha)
    below = target < Fraction(1, 2)
    for i in range(1, m):
        x = qfrac(i * alpha)
        if (x < target) if below else (x > target):
            return False
    return True
