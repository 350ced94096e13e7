"""Brute-force ground truth for abelian repetitions.

A word ``w`` factors as ``u_0 u_1 ... u_b u_{b+1}`` with a head ``u_0`` of
length ``h < m``, ``b >= 1`` blocks of length ``m`` sharing one Parikh
vector ``P``, and a tail of length ``t = (|w| - h) mod m``; head and tail
Parikh vectors must be contained in ``P``.

Two tiers are used throughout. The *relaxed* tier accepts any ``b >= 1``
(this is what minimal abelian periods are computed with). The *repetition*
tier additionally requires exponent ``|w|/m >= 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .exact import Exact, qfloor, qfrac, qsign
from .numtheory import fibonacci
from .words import ParikhVector, PrefixCounts, as_params, prefix_counts, sturmian_prefix

__all__ = [
    "TIERS",
    "AbelianFactorization",
    "PowerWitness",
    "check_factorization",
    "min_abelian_period",
    "max_power_run",
    "find_abelian_power",
    "best_power_over_starts",
    "longest_prefix_rep",
    "power_predicate",
    "power_points_check",
    "k_m_empirical",
    "k_m_witness",
    "side_distance",
]

TIERS = ("relaxed", "repetition")


@dataclass(frozen=True)
class AbelianFactorization:
    period: int
    head: int
    blocks: int
    tail: int
    block_parikh: ParikhVector

    @property
    def length(self) -> int:
        return self.head + self.blocks * self.period + self.tail

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.length, self.period)

    def pieces(self, w: str) -> list[str]:
        """Split ``w`` into head, blocks and tail (head/tail may be empty)."""
        m, h = self.period, self.head
        body = [w[h + s * m : h + (s + 1) * m] for s in range(self.blocks)]
        end = h + self.blocks * m
        return [w[:h], *body, w[end : end + self.tail]]


def _within(v: tuple[int, ...], P: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(v, P))


def _factorization(
    pc: PrefixCounts, length: int, m: int, h: int, tier: str = "relaxed"
) -> Optional[AbelianFactorization]:
    b, t = divmod(length - h, m)
    if b < 1 or (tier == "repetition" and length < 2 * m):
        return None
    P = pc.vector(h, h + m)
    for s in range(1, b):
        if pc.vector(h + s * m, h + (s + 1) * m) != P:
            return None
    end = h + b * m
    # |head|, |tail| < m, so the norm part of containment holds already
    if not (_within(pc.vector(0, h), P) and _within(pc.vector(end, end + t), P)):
        return None
    return AbelianFactorization(m, h, b, t, ParikhVector(P, pc.alphabet))


def _check_tier(tier: str) -> None:
    if tier not in TIERS:
        raise ValueError(f"tier must be one of {TIERS}, got {tier!r}")


def check_factorization(
    w: str, m: int, h: int, tier: str = "relaxed", alphabet: Optional[str] = None
) -> Optional[AbelianFactorization]:
    """The factorization of ``w`` with period ``m`` and head length ``h``, if valid.

    Block count and tail length are forced by ``|w|``, ``m`` and ``h``.
    """
    _check_tier(tier)
    if not 1 <= m <= len(w):
        raise ValueError(f"period must be in 1..{len(w)}")
    if not 0 <= h < m:
        raise ValueError(f"head length must be in 0..{m - 1}")
    return _factorization(PrefixCounts(w, alphabet), len(w), m, h, tier)


def min_abelian_period(
    w: str, tier: str = "relaxed", alphabet: Optional[str] = None
) -> Optional[AbelianFactorization]:
    """Smallest period (then smallest head) admitting a factorization.

    Never ``None`` in the relaxed tier since ``m = |w|``, ``h = 0`` works;
    in the repetition tier ``None`` means no period ``m <= |w|/2`` exists.
    """
    _check_tier(tier)
    if not w:
        raise ValueError("word must be non-empty")
    pc = PrefixCounts(w, alphabet)
    n = len(w)
    for m in range(1, n + 1):
        if tier == "repetition" and 2 * m > n:
            return None
        for h in range(m):
            f = _factorization(pc, n, m, h, tier)
            if f is not None:
                return f
    raise AssertionError("unreachable: m = |w| always factors")


def _run(pc: PrefixCounts, m: int, i: int) -> int:
    n = len(pc)
    P = pc.vector(i, i + m)
    k = 1
    i += m
    while i + m <= n and pc.vector(i, i + m) == P:
        k += 1
        i += m
    return k


def max_power_run(prefix: str, m: int, start: int) -> int:
    """Number of consecutive ``m``-blocks from ``start`` (1-based) sharing one Parikh vector."""
    if start < 1 or m < 1 or start + m - 1 > len(prefix):
        raise ValueError("the first block must fit inside the prefix")
    return _run(prefix_counts(prefix), m, start - 1)


def find_abelian_power(prefix: str, m: int, k: int) -> Optional[int]:
    """First 1-based start of an abelian power of period ``m`` with ``k`` blocks inside ``prefix``."""
    n = len(prefix)
    if m < 1 or k < 1:
        raise ValueError("need m >= 1 and k >= 1")
    last = n - k * m
    if last < 0:
        return None
    pc = prefix_counts(prefix)
    win = [pc.vector(i, i + m) for i in range(n - m + 1)]
    # run[i] = blocks sharing win[i] from offset i, computed right to left
    run = [1] * len(win)
    for i in range(len(win) - m - 1, -1, -1):
        if win[i] == win[i + m]:
            run[i] = run[i + m] + 1
    for i in range(last + 1):
        if run[i] >= k:
            return i + 1
    return None


def side_distance(alpha: Exact, m: int):
    """``{m alpha}`` if it is below 1/2, else ``{-m alpha}``."""
    x = qfrac(m * alpha)
    s = qsign(x - Fraction(1, 2))
    if s == 0:
        raise ValueError(f"{{{m} alpha}} = 1/2; alpha must be irrational")
    return x if s < 0 else qfrac(-m * alpha)


def power_predicate(alpha: Exact, m: int, k: int, strong: bool = False) -> bool:
    """Exact test of the abelian-power criterion ``side < 1/k`` (``1/(k+1)`` if ``strong``)."""
    if m < 1 or k < 2:
        raise ValueError("need m >= 1 and k >= 2")
    alpha = as_params(alpha).alpha
    delta = side_distance(alpha, m)
    return delta < Fraction(1, k + 1 if strong else k)


def _window_blocks(alpha, m: int) -> int:
    # number of blocks beyond which no abelian power of period m can run
    return qfloor(side_distance(alpha, m).reciprocal()) + 1


@dataclass(frozen=True)
class PowerWitness:
    start: int
    exponent: int
    starts: tuple[int, ...]  # every maximizing start, ascending


def best_power_over_starts(alpha: Exact, j: int) -> PowerWitness:
    """Longest abelian power of period ``F_j`` starting at some position ``<= F_j``."""
    if j <= 1:
        raise ValueError("j must be > 1")
    params = as_params(alpha)
    m = fibonacci(j)
    N = m * (_window_blocks(params.alpha, m) + 2)
    while True:
        pc = prefix_counts(sturmian_prefix(params, N))
        runs = [_run(pc, m, i) for i in range(m)]
        if all(i + (k + 1) * m <= N for i, k in enumerate(runs)):
            break
        N *= 2
    best = max(runs)
    starts = tuple(i + 1 for i, k in enumerate(runs) if k == best)
    return PowerWitness(starts[0], best, starts)


def longest_prefix_rep(alpha: Exact, m: int) -> Optional[tuple[int, AbelianFactorization]]:
    """Longest prefix of ``s_alpha`` that is an abelian repetition of period ``m``.

    Exponent at least 2 is required; ``None`` if no such prefix exists.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    params = as_params(alpha)
    N = m * (_window_blocks(params.alpha, m) + 4)
    while True:
        pc = prefix_counts(sturmian_prefix(params, N))
        best, truncated = None, False
        for h in range(m):
            P = pc.vector(h, h + m)
            if not _within(pc.vector(0, h), P):
                continue
            b = _run(pc, m, h)
            end = h + b * m
            if end + m > N:
                truncated = True
                break
            t = 0
            while t + 1 < m and _within(pc.vector(end, end + t + 1), P):
                t += 1
            L = end + t
            if L >= 2 * m and (best is None or L > best[0]):
                best = (L, AbelianFactorization(m, h, b, t, ParikhVector(P, pc.alphabet)))
        if not truncated:
            return best
        N *= 2


def power_points_check(alpha: Exact, n: int, m: int, k: int) -> bool:
    """Orbit points ``{(n + t m) alpha}``, ``0 <= t <= k``, share a side of ``{-m alpha}`` and are monotone.

    Increasing when ``{m alpha} < 1/2``, decreasing otherwise.
    """
    if k == 0:
        return True
    alpha = as_params(alpha).alpha
    pts = [qfrac((n + t * m) * alpha) for t in range(k + 1)]
    boundary = qfrac(-m * alpha)
    same_side = all(p < boundary for p in pts) or all(p >= boundary for p in pts)
    if qfrac(m * alpha) < Fraction(1, 2):
        monotone = all(x < y for x, y in zip(pts, pts[1:]))
    else:
        monotone = all(x > y for x, y in zip(pts, pts[1:]))
    return same_side and monotone


def _longest_fit(counts: np.ndarray, lo: int, hi: int, A: int, B: int, forward: bool) -> int:
    """Largest ``g <= hi - lo`` such that a length-``g`` slice fits in ``(A, B)``.

    The slice is ``w[lo:lo+g]`` when ``forward``, else ``w[hi-g:hi]``;
    containment is monotone in ``g``.
    """
    good, bad = 0, hi - lo + 1
    while bad - good > 1:
        g = (good + bad) // 2
        if forward:
            a = int(counts[lo + g] - counts[lo])
        else:
            a = int(counts[hi] - counts[hi - g])
        if a <= A and g - a <= B:
            good = g
        else:
            bad = g
    return good


def _max_repetition(counts: np.ndarray, m: int) -> tuple[int, int]:
    """Longest abelian repetition of period ``m`` in a binary word.

    ``counts`` holds cumulative ``a``-counts (length ``N + 1``). Returns the
    length and the 0-based start of one longest occurrence.
    """
    N = len(counts) - 1
    if m > N:
        return 0, 0
    win = counts[m:] - counts[:-m]
    lengths, positions, values = [], [], []
    for h in range(min(m, len(win))):
        seq = win[h::m]
        cut = np.flatnonzero(seq[1:] != seq[:-1]) + 1
        first = np.concatenate(([0], cut))
        lengths.append(np.diff(np.concatenate((first, [len(seq)]))))
        positions.append(h + first * m)
        values.append(seq[first])
    lengths = np.concatenate(lengths)
    positions = np.concatenate(positions)
    values = np.concatenate(values)
    best, where = 0, 0
    for idx in np.argsort(-lengths, kind="stable"):
        b = int(lengths[idx])
        if b * m + 2 * (m - 1) <= best:
            break
        s = int(positions[idx])
        e = s + b * m
        A = int(values[idx])
        g = _longest_fit(counts, max(0, s - m + 1), s, A, m - A, forward=False)
        t = _longest_fit(counts, e, min(N, e + m - 1), A, m - A, forward=True)
        if g + b * m + t > best:
            best, where = g + b * m + t, s - g
    return best, where


def _a_counts(word: str) -> np.ndarray:
    arr = np.frombuffer(word.encode("ascii"), dtype=np.uint8) == ord("a")
    return np.concatenate(([0], np.cumsum(arr, dtype=np.int64)))


def k_m_empirical(alpha: Exact, m: int, N: int) -> Fraction:
    """Largest exponent of an abelian repetition of period ``m`` inside the first ``N`` letters.

    Any finite ``N`` only gives a lower bound on the exponent over the whole
    infinite word.
    """
    if m < 1 or N < 2 * m:
        raise ValueError("need m >= 1 and N >= 2m")
    return Fraction(k_m_witness(alpha, m, N)[0], m)


def k_m_witness(alpha: Exact, m: int, N: int) -> tuple[int, int]:
    """Length and 1-based start of a longest period-``m`` repetition in the first ``N`` letters."""
    if m < 1 or N < 2 * m:
        raise ValueError("need m >= 1 and N >= 2m")
    word = sturmian_prefix(as_params(alpha), N)
    L, start = _max_repetition(_a_counts(word), m)
    return L, start + 1
