from fractions import Fraction
from math import floor

import pytest
from hypothesis import given, strategies as st

from conftest import to_decimal
from sturmab.exact import (
    PHI, SQRT5, FieldMismatchError, QuadraticNumber, approx_decimal, format_value,
    parse_value, qfloor, qfrac, qsign,
)

small = st.integers(-10**6, 10**6)
nonzero = small.filter(bool)


@st.composite
def quads(draw, d=5):
    return QuadraticNumber(draw(small), draw(small), draw(nonzero), d)


def test_canonical_form():
    x = QuadraticNumber(2, 4, -6, 20)  # (2 + 8 sqrt5) / -6
    assert (x.p, x.q, x.r, x.d) == (-1, -4, 3, 5)
    assert QuadraticNumber(3, 2, 1, 4) == 7
    assert QuadraticNumber(5, 0, 10, 7).d == 1


def test_rational_hash_matches_fraction():
    assert hash(QuadraticNumber(3, 0, 4)) == hash(Fraction(3, 4))
    assert {QuadraticNumber(1, 0, 2): 1}[Fraction(1, 2)] == 1


def test_golden_ratio_identities():
    assert PHI * PHI == PHI + 1
    assert PHI.reciprocal() == PHI - 1
    assert SQRT5 ** 2 == 5
    assert (PHI - 1) ** -1 == PHI


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        SQRT5 + QuadraticNumber.sqrt(2)
    with pytest.raises(FieldMismatchError):
        SQRT5 < QuadraticNumber.sqrt(2)


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        SQRT5 / 0
    with pytest.raises(ZeroDivisionError):
        QuadraticNumber(1, 2, 0, 5)


def test_floor_and_frac_known():
    assert qfloor(PHI) == 1
    assert qfloor(-PHI) == -2
    assert qfloor(1000 * SQRT5) == 2236
    assert qfrac(PHI) == PHI - 1
    assert floor(SQRT5 * 7) == 15


@pytest.mark.parametrize("x, digits, text", [
    (Fraction(1, 8), 2, "0.12"),
    (Fraction(3, 8), 2, "0.38"),
    (Fraction(-1, 8), 2, "-0.12"),
    (PHI - 1, 3, "0.618"),
    (SQRT5, 6, "2.236068"),
    (Fraction(5, 2), 1, "2.5"),
])
def test_approx_decimal(x, digits, text):
    assert approx_decimal(x, digits) == text


@given(quads(), quads())
def test_order_coherent_with_decimal(x, y):
    assert (x < y) == (to_decimal(x) < to_decimal(y))
    assert (x == y) == (to_decimal(x) == to_decimal(y))


@given(st.lists(quads(), min_size=2, max_size=1000))
def test_sort_agrees_with_decimal(xs):
    assert [to_decimal(v) for v in sorted(xs)] == sorted(to_decimal(v) for v in xs)


@given(quads(), quads(), quads())
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    if x:
        assert x * x.reciprocal() == 1


@given(quads())
def test_floor_and_frac_range(x):
    k = qfloor(x)
    assert k <= x < k + 1
    f = qfrac(x)
    assert 0 <= f < 1
    assert qsign(x) == (to_decimal(x) > 0) - (to_decimal(x) < 0)


@given(quads(), st.integers(1, 12))
def test_approx_decimal_close(x, digits):
    text = approx_decimal(x, digits)
    err = abs(to_decimal(x) - type(to_decimal(x))(text))
    assert err <= type(err)(10) ** -digits / 2


@given(st.one_of(quads(), quads(d=2), small.map(QuadraticNumber)))
def test_format_parse_round_trip(x):
    assert parse_value(format_value(x)) == x


@pytest.mark.parametrize("text, value", [
    ("ratio:3/4", Fraction(3, 4)),
    ("7", 7),
    ("-2/6", Fraction(-1, 3)),
    ("quad:1,1,2,5", PHI),
])
def test_parse_value(text, value):
    assert parse_value(text) == value


@pytest.mark.parametrize("text", ["quad:1,2,3", "quad:1,1,0,5", "ratio:1/0", "abc", "quad:1,1,1,-5"])
def test_parse_value_rejects(text):
    with pytest.raises(ValueError):
        parse_value(text)
