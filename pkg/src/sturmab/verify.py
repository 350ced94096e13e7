"""Verification sweeps: closed forms and reference values against brute force.

Each ``verify_*`` function returns a :class:`Report` whose rows are plain
dicts (exact values as ``quad:`` strings) plus an overall pass flag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import abelian, bijection, formulas, numtheory
from .exact import SQRT5, QuadraticNumber, approx_decimal, format_value, qsign
from .words import FIBONACCI_SLOPE, SturmianParams, fibonacci_word, sturmian_prefix

__all__ = [
    "Report",
    "OutOfRangeError",
    "EXPECTED_LP",
    "EXPECTED_GAP",
    "EXPECTED_PERIOD_INDEX",
    "SWEEP_SLOPES",
    "TARGETS",
    "BOUNDS",
    "verify_lp",
    "verify_min_period",
    "verify_power_criterion",
    "verify_lexorder",
    "verify_identity",
    "verify_parikh_split",
    "verify_power_at_period",
    "verify_best_approx",
    "verify_asymptotics",
]

# reference values, keyed by j
EXPECTED_LP = {2: 8, 3: 19, 4: 58, 5: 142, 6: 388, 7: 985, 8: 2616, 9: 6763, 10: 17798, 11: 46366}
EXPECTED_GAP = {
    2: "23.6", 3: "12.5", 4: "8.393", 5: "1.732", 6: "5.98",
    7: "0.25", 8: "2.69", 9: "0.037", 10: "1.087", 11: "0.005",
}
# n such that the abelian period of f_j is F_n
EXPECTED_PERIOD_INDEX = dict(zip(range(3, 17), [2, 2, 2, 3, 4, 4, 4, 5, 6, 6, 6, 7, 8, 8]))

SQRT2 = QuadraticNumber.sqrt(2)
SWEEP_SLOPES: dict[str, QuadraticNumber] = {
    "phi-1": FIBONACCI_SLOPE,
    "sqrt5-2": SQRT5 - 2,
    "(7-sqrt5)/10": (7 - SQRT5) / 10,
    "sqrt2-1": SQRT2 - 1,
    "sqrt2/2": SQRT2 / 2,
}

# inclusive (low, high) limits on the ranges each sweep accepts
BOUNDS = {
    "lp": (2, 11),
    "min-period": (3, 20),
    "identity": (1, 500),
    "power-at-period": (2, 12),
    "best-approx": (2, 20),
    "max_m": (1, 500),
    "max_k": (2, 20),
    "max_denominator": (2, 10**6),
    "asymptotics_j": (2, 60),
    "asymptotics_N": (2, 10**6),
}


class OutOfRangeError(ValueError):
    pass


@dataclass
class Report:
    target: str
    rows: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["status"] == "PASS" for r in self.rows)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.rows if r["status"] != "PASS"]

    def add(self, ok: bool, **cells) -> None:
        self.rows.append({**cells, "status": "PASS" if ok else "FAIL"})


def check_range(name: str, values: Iterable[int]) -> None:
    lo, hi = BOUNDS[name]
    values = list(values)
    if not values or min(values) < lo or max(values) > hi:
        raise OutOfRangeError(f"{name} must stay within {lo}..{hi}")


def verify_lp(js: Sequence[int] = range(2, 12), oracle_max_j: int = 9) -> Report:
    """lp(F_j) and the x100 sqrt5 gap against the reference values.

    The brute-force longest-prefix search runs for ``j <= oracle_max_j``.
    """
    check_range("lp", js)
    rep = Report("lp")
    for j in js:
        m = numtheory.fibonacci(j)
        lp = formulas.lp_formula(j)
        oracle = None
        if j <= oracle_max_j:
            found = abelian.longest_prefix_rep(FIBONACCI_SLOPE, m)
            oracle = found[0] if found else None
        gap = formulas.render_gap(j)
        ok = lp == EXPECTED_LP[j] and gap == EXPECTED_GAP[j] and (oracle is None or oracle == lp)
        if j <= oracle_max_j and oracle is None:
            ok = False
        rep.add(
            ok, j=j, F_j=m, lp_expected=EXPECTED_LP[j], lp_formula=lp,
            lp_bruteforce="-" if j > oracle_max_j else oracle,
            gap_expected=EXPECTED_GAP[j], gap_formula=gap,
            gap_exact=format_value(formulas.sqrt5_gap(j)),
        )
    return rep


def verify_min_period(js: Sequence[int] = range(3, 17)) -> Report:
    """Smallest abelian period of f_j: brute force versus the closed form."""
    check_range("min-period", js)
    rep = Report("min-period")
    for j in js:
        w = fibonacci_word(j)
        found = abelian.min_abelian_period(w).period
        n = formulas.min_ab_period_index(j)
        expected = formulas.min_ab_period_fib(j)
        ref = EXPECTED_PERIOD_INDEX.get(j)
        ok = found == expected and (ref is None or ref == n)
        rep.add(
            ok, j=j, length=len(w), expected=f"F_{ref}" if ref else "-",
            formula=f"F_{n}={expected}", bruteforce=found,
        )
    return rep


def verify_power_criterion(alpha=FIBONACCI_SLOPE, max_m: int = 200, max_k: int = 10, extra_blocks: int = 6) -> Report:
    """Exponent criterion against abelian powers found in a finite prefix.

    For each ``m`` and ``2 <= k <= max_k``: the weak predicate must agree
    with the presence of a ``k``-block power inside the first
    ``m * (k + extra_blocks)`` letters, and the strong predicate must imply
    a power of at least ``k`` blocks starting at position ``m``.
    """
    check_range("max_m", [max_m])
    check_range("max_k", [max_k])
    params = SturmianParams(alpha)
    rep = Report("power-criterion")
    for m in range(1, max_m + 1):
        w = sturmian_prefix(params, m * (max_k + extra_blocks))
        run_at_m = abelian.max_power_run(w, m, m)
        bad = []
        weak = strong = 1
        for k in range(2, max_k + 1):
            pred = abelian.power_predicate(alpha, m, k)
            found = abelian.find_abelian_power(w[: m * (k + extra_blocks)], m, k)
            if pred != (found is not None):
                bad.append(f"k={k}:{'no witness' if pred else f'witness at {found}'}")
            if abelian.power_predicate(alpha, m, k, strong=True):
                strong = k
                if run_at_m < k:
                    bad.append(f"k={k}:strong, run at m is {run_at_m}")
            if pred:
                weak = k
        rep.add(
            not bad, m=m, side=approx_decimal(abelian.side_distance(alpha, m), 6),
            weak_k=weak, strong_k=strong, run_at_m=run_at_m, violations=";".join(bad) or "-",
        )
    return rep


def _slope_sweep(target: str, check: Callable[[QuadraticNumber, int], bool], max_m: int, slopes) -> Report:
    check_range("max_m", [max_m])
    rep = Report(target)
    for name, alpha in slopes.items():
        bad = [m for m in range(1, max_m + 1) if not check(alpha, m)]
        rep.add(not bad, alpha=name, exact=format_value(alpha), max_m=max_m,
                failing_m=",".join(map(str, bad)) or "-")
    return rep


def _lex_and_count(alpha, m) -> bool:
    facts = [f.factor for f in bijection.all_factors(alpha, m)]
    return len(facts) == m + 1 and len(set(facts)) == m + 1 and bijection.verify_lex_order(alpha, m)


def verify_lexorder(max_m: int = 60, slopes=None) -> Report:
    """m+1 distinct factors in strictly decreasing lexicographic order."""
    return _slope_sweep("lexorder", _lex_and_count, max_m, slopes or SWEEP_SLOPES)


def verify_parikh_split(max_m: int = 60, slopes=None) -> Report:
    """Exactly two Parikh classes, split at ``{-m alpha}``, differing by one ``a``."""
    return _slope_sweep("parikh-split", bijection.verify_parikh_split, max_m, slopes or SWEEP_SLOPES)


def verify_identity(js: Sequence[int] = range(1, 41)) -> Report:
    check_range("identity", js)
    rep = Report("identity")
    for j in js:
        c = numtheory.golden_identity_check(j)
        sign = qsign(c.lhs)
        rep.add(
            c.equal and sign == (-1) ** j, j=j, lhs=format_value(c.lhs),
            rhs=format_value(c.rhs), decimal=approx_decimal(c.lhs, 12), sign=sign,
        )
    return rep


def verify_power_at_period(js: Sequence[int] = range(2, 10)) -> Report:
    check_range("power-at-period", js)
    rep = Report("power-at-period")
    for j in js:
        m = numtheory.fibonacci(j)
        w = abelian.best_power_over_starts(FIBONACCI_SLOPE, j)
        expected = formulas.max_exp_formula(j)
        rep.add(
            w.exponent == expected and m in w.starts, j=j, F_j=m, formula=expected,
            bruteforce=w.exponent, starts=",".join(map(str, w.starts)),
        )
    return rep


def verify_best_approx(js: Sequence[int] = range(2, 16), max_denominator: int = 10**4,
                      alpha=FIBONACCI_SLOPE) -> Report:
    """Best approximation by convergents and the resulting side condition.

    Convergents with index ``> 1`` and denominator up to ``max_denominator``
    are checked exhaustively; the side condition runs on ``m = F_j``.
    """
    check_range("best-approx", js)
    check_range("max_denominator", [max_denominator])
    rep = Report("best-approx")
    count = 2
    while numtheory.convergents(alpha, count)[-1].denominator <= max_denominator:
        count += 1
    for c in numtheory.convergents(alpha, count)[:-1]:
        if c.index > 1:
            rep.add(numtheory.best_approx_check(alpha, c.index), check="best-approx",
                    index=c.index, value=str(c))
    for j in js:
        m = numtheory.fibonacci(j)
        if m > 1:
            rep.add(numtheory.side_condition_check(alpha, m), check="side", index=j, value=m)
    return rep


def verify_asymptotics(max_j: int = 20, max_m: int = 100, N: int = 10**5) -> Report:
    """Finite-scale evidence for the sqrt5 limit (not a proof of it).

    Same-parity gaps ``|sqrt5 - lp(F_j)/F_j^2|`` must shrink, and the
    exponent found for each ``m <= max_m`` in the first ``N`` letters must
    satisfy ``exponent/m <= sqrt5 + 1/m``.
    """
    check_range("asymptotics_j", [max_j])
    check_range("max_m", [max_m])
    check_range("asymptotics_N", [N])
    rep = Report("asymptotics")
    for j in range(2, max_j - 1):
        g0, g2 = formulas.sqrt5_gap(j), formulas.sqrt5_gap(j + 2)
        rep.add(g2 < g0, check="gap", index=j,
                value=f"{approx_decimal(g0 * 100, 6)} > {approx_decimal(g2 * 100, 6)}")
    for m in range(1, max_m + 1):
        e = abelian.k_m_empirical(FIBONACCI_SLOPE, m, N)
        ratio = e / m
        rep.add(ratio <= SQRT5 + Fraction(1, m), check="k_m", index=m,
                value=f"{e} ({approx_decimal(ratio, 6)})")
    return rep


TARGETS = {
    "lp": verify_lp,
    "min-period": verify_min_period,
    "power-criterion": verify_power_criterion,
    "lexorder": verify_lexorder,
    "identity": verify_identity,
    "parikh-split": verify_parikh_split,
    "power-at-period": verify_power_at_period,
    "best-approx": verify_best_approx,
    "asymptotics": verify_asymptotics,
}
