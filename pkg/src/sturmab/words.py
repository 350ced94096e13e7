"""Finite words, Parikh vectors and Sturmian / Fibonacci word generation.

Words are plain ``str`` values. Positions exposed by this package are
1-based, like ``a_1 a_2 a_3 ...`` for the letters of a Sturmian word.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from itertools import accumulate
from typing import Optional

from .exact import PHI, Exact, QuadraticNumber, as_quadratic, qfrac, qsign, sign_pq

__all__ = [
    "AlphabetMismatchError",
    "RationalSlopeError",
    "ParikhVector",
    "PrefixCounts",
    "SturmianParams",
    "FIBONACCI_SLOPE",
    "parikh",
    "parikh_contained",
    "prefix_counts",
    "as_params",
    "sturmian_letter",
    "sturmian_prefix",
    "fibonacci_word",
]

FIBONACCI_SLOPE = PHI - 1


class AlphabetMismatchError(ValueError):
    pass


class RationalSlopeError(ValueError):
    """A rational slope was given without opting into periodic mode."""


@dataclass(frozen=True)
class ParikhVector:
    """Letter counts of a word, one per letter of ``alphabet`` in order."""

    counts: tuple[int, ...]
    alphabet: str = "ab"

    @property
    def norm(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def __str__(self):
        return "(" + ", ".join(map(str, self.counts)) + ")"


def parikh(w: str, alphabet: Optional[str] = None) -> ParikhVector:
    alphabet = "ab" if alphabet is None else alphabet
    extra = set(w) - set(alphabet)
    if extra:
        raise AlphabetMismatchError(
            f"letters {''.join(sorted(extra))!r} not in alphabet {alphabet!r}"
        )
    return ParikhVector(tuple(w.count(c) for c in alphabet), alphabet)


def parikh_contained(P: ParikhVector, Q: ParikhVector) -> bool:
    """Strict containment: ``P[i] <= Q[i]`` for all ``i`` and ``|P| < |Q|``."""
    if P.alphabet != Q.alphabet:
        raise AlphabetMismatchError(f"alphabets differ: {P.alphabet!r} vs {Q.alphabet!r}")
    return all(x <= y for x, y in zip(P.counts, Q.counts)) and P.norm < Q.norm


class PrefixCounts:
    """Cumulative letter counts of a word, for O(sigma) Parikh vectors of factors.

    Offsets are 0-based and half-open: ``vector(i, j)`` profiles ``w[i:j]``.
    """

    def __init__(self, word: str, alphabet: Optional[str] = None):
        self.word = word
        self.alphabet = alphabet if alphabet is not None else "".join(sorted(set(word)))
        if not set(word) <= set(self.alphabet):
            raise AlphabetMismatchError(f"word uses letters outside {self.alphabet!r}")
        rows = [[0, *accumulate(int(x == c) for x in word)] for c in self.alphabet]
        self.rows = rows

    def __len__(self):
        return len(self.word)

    def vector(self, i: int, j: int) -> tuple[int, ...]:
        return tuple(row[j] - row[i] for row in self.rows)

    def parikh(self, i: int, j: int) -> ParikhVector:
        return ParikhVector(self.vector(i, j), self.alphabet)


@lru_cache(maxsize=16)
def prefix_counts(word: str, alphabet: Optional[str] = None) -> PrefixCounts:
    return PrefixCounts(word, alphabet)


@dataclass(frozen=True)
class SturmianParams:
    """Slope ``alpha`` in (0, 1) and intercept ``rho`` of ``s_{alpha,rho}``.

    Rational slopes give periodic words and are refused unless ``periodic``
    is set.
    """

    alpha: QuadraticNumber
    rho: QuadraticNumber = QuadraticNumber(0)
    periodic: bool = False

    def __post_init__(self):
        alpha, rho = as_quadratic(self.alpha), as_quadratic(self.rho)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "rho", rho)
        if not (qsign(alpha) > 0 and qsign(1 - alpha) > 0):
            raise ValueError(f"slope must lie in (0, 1), got {alpha}")
        if alpha.is_rational and not self.periodic:
            raise RationalSlopeError(
                f"slope {alpha} is rational; pass periodic=True for periodic words"
            )
        alpha + rho  # raises FieldMismatchError on incompatible fields


def as_params(alpha: Exact | SturmianParams, rho: Exact = 0, periodic: bool = False):
    if isinstance(alpha, SturmianParams):
        return alpha
    return SturmianParams(as_quadratic(alpha), as_quadratic(rho), periodic)


def sturmian_letter(params: SturmianParams, n: int) -> str:
    """Letter ``a_n``: ``'b'`` iff ``{n alpha + rho}`` lies in ``[0, {-alpha})``."""
    if n < 1:
        raise ValueError("positions are 1-based")
    x = qfrac(n * params.alpha + params.rho)
    return "b" if x < qfrac(-params.alpha) else "a"


@lru_cache(maxsize=32)
def _prefix(params: SturmianParams, N: int) -> str:
    alpha, rho = params.alpha, params.rho
    d = alpha.d if not alpha.is_rational else rho.d
    start = qfrac(alpha + rho)
    R = lcm(alpha.r, start.r)
    ap, aq = alpha.p * (R // alpha.r), alpha.q * (R // alpha.r)
    xp, xq = start.p * (R // start.r), start.q * (R // start.r)
    out = []
    for _ in range(N):
        # x + alpha < 1  <=>  x < {-alpha}  <=>  letter b, and no wrap-around
        yp, yq = xp + ap, xq + aq
        if sign_pq(yp - R, yq, d) < 0:
            out.append("b")
            xp, xq = yp, yq
        else:
            out.append("a")
            xp, xq = yp - R, yq
    return "".join(out)


def sturmian_prefix(params: SturmianParams, N: int) -> str:
    """First ``N`` letters of ``s_{alpha,rho}``, by stepping the orbit ``{n alpha + rho}``."""
    if N < 0:
        raise ValueError("length must be non-negative")
    return _prefix(params, N)


@lru_cache(maxsize=64)
def fibonacci_word(j: int) -> str:
    """``f_0 = b``, ``f_1 = a``, ``f_{j+1} = f_j f_{j-1}``."""
    if j < 0:
        raise ValueError("index must be non-negative")
    prev, cur = "b", "a"
    if j == 0:
        return prev
    for _ in range(j - 1):
        prev, cur = cur, cur + prev
    return cur
