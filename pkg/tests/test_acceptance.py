"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run ``python3 tests/test_acceptance.py`` for the summary alone, or
``pytest tests/test_acceptance.py`` for the usual report.
"""

import time
from fractions import Fraction

import pytest

from sturmab import verify
from sturmab.abelian import best_power_over_starts, k_m_empirical, longest_prefix_rep
from sturmab.exact import SQRT5, QuadraticNumber
from sturmab.formulas import lp_formula, max_exp_formula, render_gap, sqrt5_gap
from sturmab.numtheory import fibonacci
from sturmab.words import FIBONACCI_SLOPE

LP = (8, 19, 58, 142, 388, 985, 2616, 6763, 17798, 46366)
GAPS = ("23.6", "12.5", "8.393", "1.732", "5.98", "0.25", "2.69", "0.037", "1.087", "0.005")
PERIOD_INDEX = (2, 2, 2, 3, 4, 4, 4, 5, 6, 6, 6, 7, 8, 8)
SQRT2 = QuadraticNumber.sqrt(2)
SLOPES = {
    "phi-1": FIBONACCI_SLOPE,
    "sqrt5-2": SQRT5 - 2,
    "(7-sqrt5)/10": (7 - SQRT5) / 10,
    "sqrt2-1": SQRT2 - 1,
    "sqrt2/2": SQRT2 / 2,
}


def _report(number, name, ok, seconds, detail=""):
    line = f"criterion {number} {name}: {'PASS' if ok else 'FAIL'} ({seconds:.2f} s){' ' + detail if detail else ''}"
    print(line)
    return line


def _timed(fn):
    t = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t


def check_1():
    def body():
        formula = tuple(lp_formula(j) for j in range(2, 12))
        oracle = tuple(longest_prefix_rep(FIBONACCI_SLOPE, fibonacci(j))[0] for j in range(2, 10))
        return formula, oracle, verify.verify_lp()
    (formula, oracle, rep), s = _timed(body)
    ok = formula == LP and oracle == LP[:8] and rep.passed and s < 5
    return ok, s, "" if ok else f"formula={formula} oracle={oracle}"


def check_2():
    gaps, s = _timed(lambda: tuple(render_gap(j) for j in range(2, 12)))
    ok = gaps == GAPS
    return ok, s, "" if ok else f"got {gaps}"


def check_3():
    rep, s = _timed(lambda: verify.verify_min_period(range(3, 17)))
    found = tuple(r["bruteforce"] for r in rep.rows)
    ok = rep.passed and found == tuple(fibonacci(n) for n in PERIOD_INDEX) and s < 5
    return ok, s, "" if ok else f"found {found}"


def check_4():
    def body():
        return [(j, best_power_over_starts(FIBONACCI_SLOPE, j)) for j in range(2, 10)]
    res, s = _timed(body)
    bad = [j for j, w in res if w.exponent != max_exp_formula(j) or fibonacci(j) not in w.starts]
    ok = not bad and s < 30
    return ok, s, "" if ok else f"mismatch at j={bad}"


def check_5():
    rep, s = _timed(lambda: verify.verify_power_criterion(FIBONACCI_SLOPE, max_m=200, max_k=10, extra_blocks=6))
    bad = [f"m={r['m']} {r['violations']}" for r in rep.failures]
    ok = rep.passed and s < 60
    return ok, s, "" if ok else f"{len(bad)} violations: {'; '.join(bad)}"


def check_6():
    rep, s = _timed(lambda: verify.verify_identity(range(1, 41)))
    ok = rep.passed and len(rep.rows) == 40 and s < 1
    return ok, s, "" if ok else f"failures {[r['j'] for r in rep.failures]}"


def check_7():
    rep, s = _timed(lambda: verify.verify_best_approx(range(2, 16), max_denominator=10**4))
    checked = {r["check"] for r in rep.rows}
    ok = rep.passed and checked == {"best-approx", "side"} and s < 30
    return ok, s, "" if ok else f"failures {rep.failures}"


def check_8():
    def body():
        return verify.verify_lexorder(60, SLOPES), verify.verify_parikh_split(60, SLOPES)
    (lex, split), s = _timed(body)
    ok = lex.passed and split.passed and s < 30
    return ok, s, "" if ok else f"lex {lex.failures} split {split.failures}"


def check_9():
    def body():
        gaps_ok = all(sqrt5_gap(j + 2) < sqrt5_gap(j) for j in range(2, 19))
        over = []
        for m in range(1, 101):
            e = k_m_empirical(FIBONACCI_SLOPE, m, 10**5)
            if not e / m <= SQRT5 + Fraction(1, m):
                over.append(f"m={m}:{e}")
        return gaps_ok, over
    (gaps_ok, over), s = _timed(body)
    ok = gaps_ok and not over
    return ok, s, "" if ok else f"gap monotone={gaps_ok}; k_m/m above sqrt5+1/m at {', '.join(over)}"


CRITERIA = [
    (1, "longest prefix lengths", check_1),
    (2, "sqrt5 gap strings", check_2),
    (3, "Fibonacci word periods", check_3),
    (4, "longest power at F_j", check_4),
    (5, "power criterion sweep", check_5),
    (6, "golden identity", check_6),
    (7, "best approximation and side condition", check_7),
    (8, "bijection properties", check_8),
    (9, "asymptotic exponent", check_9),
]


@pytest.mark.parametrize("number, name, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, name, check, capsys):
    ok, seconds, detail = check()
    with capsys.disabled():
        print()
        _report(number, name, ok, seconds, detail)
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, name, check in CRITERIA:
        ok, seconds, detail = check()
        _report(number, name, ok, seconds, detail)
        results.append(ok)
    raise SystemExit(0 if all(results) else 1)
