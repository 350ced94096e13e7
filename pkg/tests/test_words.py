from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sturmab.exact import SQRT5, FieldMismatchError, QuadraticNumber, qfrac
from sturmab.words import (
    FIBONACCI_SLOPE, AlphabetMismatchError, ParikhVector, PrefixCounts, RationalSlopeError,
    SturmianParams, as_params, fibonacci_word, parikh, parikh_contained, sturmian_letter,
    sturmian_prefix,
)

FIB = SturmianParams(FIBONACCI_SLOPE)
SQRT2 = QuadraticNumber.sqrt(2)


def rule_letter(alpha, rho, n):
    # direct evaluation of the threshold rule, no shared code with the generator
    return "b" if qfrac(n * alpha + rho) < qfrac(-alpha) else "a"


def test_fibonacci_prefix():
    assert sturmian_prefix(FIB, 21) == "abaababaabaababaababa"
    assert sturmian_prefix(FIB, 0) == ""
    assert sturmian_letter(FIB, 1) == "a"
    assert sturmian_letter(FIB, 4) == "a"


def test_sqrt5_minus_2_prefix_follows_rule():
    alpha = SQRT5 - 2
    w = sturmian_prefix(SturmianParams(alpha), 10)
    assert w == "".join(rule_letter(alpha, 0, n) for n in range(1, 11))
    assert w == "bbbabbbabb"


def test_rational_slope_needs_periodic_flag():
    with pytest.raises(RationalSlopeError):
        SturmianParams(QuadraticNumber(1, 0, 2))
    half = SturmianParams(QuadraticNumber(1, 0, 2), periodic=True)
    assert sturmian_letter(half, 1) == "a"
    w = sturmian_prefix(SturmianParams(Fraction(2, 5), periodic=True), 20)
    assert w[:5] * 4 == w


@pytest.mark.parametrize("alpha", [0, 1, -FIBONACCI_SLOPE, 1 + FIBONACCI_SLOPE])
def test_slope_out_of_range(alpha):
    with pytest.raises(ValueError):
        SturmianParams(alpha, periodic=True)


def test_field_mismatch_between_alpha_and_rho():
    with pytest.raises(FieldMismatchError):
        SturmianParams(FIBONACCI_SLOPE, SQRT2 - 1)


slopes = st.sampled_from([FIBONACCI_SLOPE, SQRT5 - 2, (7 - SQRT5) / 10, SQRT2 - 1, SQRT2 / 2])
intercepts = st.fractions(0, 1, max_denominator=50)


@given(slopes, intercepts, st.integers(0, 300))
def test_incremental_generation_matches_rule(alpha, rho, N):
    w = sturmian_prefix(SturmianParams(alpha, rho), N)
    assert len(w) == N
    assert w == "".join(rule_letter(alpha, rho, n) for n in range(1, N + 1))


@given(slopes, intercepts)
def test_factor_complexity_and_balance(alpha, rho):
    w = sturmian_prefix(SturmianParams(alpha, rho), 600)
    for m in range(1, 16):
        windows = {w[i:i + m] for i in range(len(w) - m + 1)}
        assert len(windows) == m + 1
        assert max(x.count("a") for x in windows) - min(x.count("a") for x in windows) == 1


def test_fibonacci_words():
    assert fibonacci_word(0) == "b"
    assert fibonacci_word(1) == "a"
    assert fibonacci_word(4) == "abaab"
    assert fibonacci_word(7) == "abaababaabaababaababa"


@pytest.mark.parametrize("j", range(2, 20))
def test_fibonacci_word_recursion_and_prefix(j):
    f = fibonacci_word(j)
    assert f == fibonacci_word(j - 1) + fibonacci_word(j - 2)
    assert sturmian_prefix(FIB, len(f)) == f


def test_parikh():
    assert parikh("abaab") == ParikhVector((3, 2))
    assert parikh("") == ParikhVector((0, 0))
    assert parikh("xyzzy", "xyz").counts == (1, 2, 2)
    with pytest.raises(AlphabetMismatchError):
        parikh("abc")


def test_parikh_contained():
    assert parikh_contained(ParikhVector((1, 0)), ParikhVector((1, 1)))
    assert not parikh_contained(ParikhVector((1, 1)), ParikhVector((1, 1)))
    assert not parikh_contained(ParikhVector((2, 0)), ParikhVector((1, 1)))
    with pytest.raises(AlphabetMismatchError):
        parikh_contained(ParikhVector((1, 0), "ab"), ParikhVector((1, 1), "xy"))


@given(st.text(alphabet="abc", max_size=60), st.data())
def test_prefix_counts_match_direct_count(w, data):
    pc = PrefixCounts(w, "abc")
    i = data.draw(st.integers(0, len(w)))
    j = data.draw(st.integers(i, len(w)))
    assert pc.parikh(i, j) == parikh(w[i:j], "abc")


def test_as_params():
    p = as_params(FIBONACCI_SLOPE)
    assert p == FIB
    assert as_params(p) is p
