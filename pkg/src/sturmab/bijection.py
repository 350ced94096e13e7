"""The Sturmian bijection between length-m factors and subintervals of [0, 1).

The points ``{-i alpha}`` (``1 <= i <= m``) together with 0 and 1 cut
[0, 1) into ``m + 1`` half-open intervals ``L_k = [c_k, c_{k+1})``. The
length-m factor starting at position ``n`` depends only on which ``L_k``
contains ``{n alpha + rho}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import Exact, QuadraticNumber, as_quadratic, qfrac
from .words import ParikhVector, as_params, parikh

__all__ = [
    "DegeneratePointError",
    "IntervalPartition",
    "FactorInterval",
    "partition",
    "letter_rule",
    "interval_factor",
    "all_factors",
    "locate",
    "parikh_split",
    "verify_lex_order",
    "verify_parikh_split",
]


class DegeneratePointError(ValueError):
    """Two points that must differ coincide exactly."""


@dataclass(frozen=True)
class IntervalPartition:
    alpha: QuadraticNumber
    m: int
    points: tuple[QuadraticNumber, ...]
    # rank[i] = k such that c_k = {-i alpha}; rank[0] = 0
    rank: tuple[int, ...]

    def interval(self, k: int) -> tuple[QuadraticNumber, QuadraticNumber]:
        return self.points[k], self.points[k + 1]

    @property
    def boundary_index(self) -> int:
        """Index ``k`` with ``c_k = {-m alpha}``."""
        return self.rank[self.m]


@dataclass(frozen=True)
class FactorInterval:
    k: int
    left: QuadraticNumber
    right: QuadraticNumber
    factor: str
    parikh_class: str  # "v1" right of {-m alpha}, "v2" left of it

    @property
    def parikh(self) -> ParikhVector:
        return parikh(self.factor)


@lru_cache(maxsize=256)
def _partition(alpha: QuadraticNumber, m: int) -> IntervalPartition:
    pts = [qfrac(-i * alpha) for i in range(1, m + 1)]
    order = sorted(range(1, m + 1), key=lambda i: pts[i - 1])
    for a, b in zip(order, order[1:]):
        if pts[a - 1] == pts[b - 1]:
            raise DegeneratePointError(
                f"{{-{a} alpha}} = {{-{b} alpha}}; alpha must be irrational"
            )
    if pts[order[0] - 1] == 0:
        raise DegeneratePointError(f"{{-{order[0]} alpha}} = 0; alpha must be irrational")
    rank = [0] * (m + 1)
    for k, i in enumerate(order, 1):
        rank[i] = k
    points = (QuadraticNumber(0), *(pts[i - 1] for i in order), QuadraticNumber(1))
    return IntervalPartition(alpha, m, points, tuple(rank))


def partition(alpha: Exact, m: int) -> IntervalPartition:
    """Sorted points ``0 = c_0 < c_1 < ... < c_m < c_{m+1} = 1``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    alpha = as_quadratic(alpha)
    if not (0 < alpha < 1):
        raise ValueError("alpha must lie in (0, 1)")
    return _partition(alpha, m)


def letter_rule(alpha: Exact, rho: Exact, n: int, i: int) -> str:
    """Letter ``a_{n+i}`` read off the position of ``{n alpha + rho}``.

    With ``u = {-(i+1) alpha}`` and ``v = {-i alpha}``: if ``u < v`` the
    letter is ``a`` iff the point is in ``[u, v)``; otherwise iff it is in
    ``[0, v) | [u, 1)``.
    """
    if n < 1 or i < 0:
        raise ValueError("need n >= 1 and i >= 0")
    params = as_params(alpha, rho)
    alpha = params.alpha
    x = qfrac(n * alpha + params.rho)
    u, v = qfrac(-(i + 1) * alpha), qfrac(-i * alpha)
    if u < v:
        is_a = u <= x < v
    else:
        is_a = x < v or x >= u
    return "a" if is_a else "b"


def _factor_at(part: IntervalPartition, k: int) -> str:
    # Membership of c_k is decided on ranks: every endpoint involved is a
    # partition point, so comparing ranks is comparing the exact values.
    rank = part.rank
    letters = []
    for i in range(part.m):
        u, v = rank[i + 1], rank[i]
        if u < v:
            is_a = u <= k < v
        else:
            is_a = not (v <= k < u)
        letters.append("a" if is_a else "b")
    return "".join(letters)


def interval_factor(alpha: Exact, m: int, k: int) -> str:
    """The length-m factor attached to ``L_k(alpha, m)``."""
    part = partition(alpha, m)
    if not 0 <= k <= m:
        raise ValueError(f"k must be in 0..{m}")
    return _factor_at(part, k)


def all_factors(alpha: Exact, m: int) -> list[FactorInterval]:
    part = partition(alpha, m)
    b = part.boundary_index
    out = []
    for k in range(m + 1):
        left, right = part.interval(k)
        out.append(FactorInterval(k, left, right, _factor_at(part, k), "v1" if k >= b else "v2"))
    return out


def locate(alpha: Exact, rho: Exact, n: int, m: int) -> int:
    """Index ``k`` of the interval containing ``{n alpha + rho}``."""
    if n < 1:
        raise ValueError("positions are 1-based")
    params = as_params(alpha, rho)
    part = partition(params.alpha, m)
    x = qfrac(n * params.alpha + params.rho)
    lo, hi = 0, m + 1  # invariant: c_lo <= x < c_hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if part.points[mid] <= x:
            lo = mid
        else:
            hi = mid
    if x == part.points[lo]:
        raise DegeneratePointError(
            f"{{{n} alpha + rho}} coincides with partition point c_{lo}"
        )
    return lo


def parikh_split(alpha: Exact, m: int) -> tuple[ParikhVector, ParikhVector, QuadraticNumber]:
    """Return ``(v1, v2, {-m alpha})``.

    ``v1`` profiles every factor whose interval lies at or right of the
    boundary, ``v2`` every factor left of it. Raises ``ValueError`` if a side
    carries more than one Parikh vector.
    """
    part = partition(alpha, m)
    sides = {"v1": set(), "v2": set()}
    for f in all_factors(alpha, m):
        sides[f.parikh_class].add(parikh(f.factor))
    if len(sides["v1"]) != 1 or len(sides["v2"]) != 1:
        raise ValueError(f"Parikh vectors do not split in two classes for m={m}")
    (v1,), (v2,) = sides["v1"], sides["v2"]
    return v1, v2, part.points[part.boundary_index]


def verify_parikh_split(alpha: Exact, m: int) -> bool:
    try:
        v1, v2, _ = parikh_split(alpha, m)
    except ValueError:
        return False
    return v1 != v2 and v1[0] == v2[0] + 1 and v1.norm == v2.norm == m


def verify_lex_order(alpha: Exact, m: int) -> bool:
    """True iff factors strictly decrease lexicographically as ``k`` grows."""
    words = [f.factor for f in all_factors(alpha, m)]
    return all(x > y for x, y in zip(words, words[1:]))
