"""Closed-form predictions for Fibonacci periods.

Nothing here calls the brute-force code in :mod:`sturmab.abelian`; the two
sides are meant to check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import PHI, SQRT5, QuadraticNumber, approx_decimal, qfloor
from .numtheory import fibonacci

__all__ = [
    "FibPrediction",
    "max_exp_formula",
    "lp_formula",
    "min_ab_period_index",
    "min_ab_period_fib",
    "sqrt5_gap",
    "render_gap",
    "predict",
    "GAP_DECIMALS",
]

# fractional digits shown for each x100 gap value, keyed by j
GAP_DECIMALS = {2: 1, 3: 1, 4: 3, 5: 3, 6: 2, 7: 2, 8: 2, 9: 3, 10: 3, 11: 3}


def _check_j(j: int) -> None:
    if j <= 1:
        raise ValueError("j must be > 1")


def max_exp_formula(j: int) -> int:
    """Exponent of the longest abelian power of period F_j starting at or before F_j.

    Computed from the parity split and cross-checked against
    ``floor(phi F_j + F_{j-1}) - 1``.
    """
    _check_j(j)
    base = fibonacci(j + 1) + fibonacci(j - 1)
    value = base - 1 if j % 2 == 0 else base - 2
    floor_form = qfloor(PHI * fibonacci(j) + fibonacci(j - 1)) - 1
    if value != floor_form:
        raise ArithmeticError(f"parity form {value} != floor form {floor_form} at j={j}")
    return value


def lp_formula(j: int) -> int:
    """Length of the longest prefix of the Fibonacci word with abelian period F_j."""
    _check_j(j)
    base = fibonacci(j + 1) + fibonacci(j - 1)
    if j % 2 == 0:
        base += 1
    return fibonacci(j) * base - 2


def min_ab_period_index(j: int) -> int:
    if j < 3:
        raise ValueError("the closed form covers j >= 3 only")
    return j // 2 + 1 if j % 4 == 3 else j // 2


def min_ab_period_fib(j: int) -> int:
    """Smallest abelian period of the finite Fibonacci word f_j."""
    return fibonacci(min_ab_period_index(j))


def sqrt5_gap(j: int) -> QuadraticNumber:
    """``|sqrt5 - lp(F_j) / F_j^2|`` exactly."""
    f = fibonacci(j)
    return abs(SQRT5 - Fraction(lp_formula(j), f * f))


def render_gap(j: int, digits: int | None = None) -> str:
    """The gap times 100, rounded; ``digits`` defaults to GAP_DECIMALS[j]."""
    if digits is None:
        digits = GAP_DECIMALS.get(j, 3)
    return approx_decimal(sqrt5_gap(j) * 100, digits)


@dataclass(frozen=True)
class FibPrediction:
    j: int
    period: int
    max_power_exponent: int
    lp: int
    min_ab_period: int | None  # None for j < 3
    sqrt5_gap: QuadraticNumber


def predict(j: int) -> FibPrediction:
    _check_j(j)
    return FibPrediction(
        j=j,
        period=fibonacci(j),
        max_power_exponent=max_exp_formula(j),
        lp=lp_formula(j),
        min_ab_period=min_ab_period_fib(j) if j >= 3 else None,
        sqrt5_gap=sqrt5_gap(j),
    )
