from fractions import Fraction

import pytest
from hypothesis import given

from conftest import rationals
from core.utils.rationals import (
    INF,
    div,
    ext_sum,
    format_rational,
    is_exact,
    mul,
    power,
    reciprocal,
    to_extended,
    to_fraction,
)


def test_parse_num_den_and_integers():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction(" 7 ") == Fraction(7)
    assert to_fraction(5) == Fraction(5)


@pytest.mark.parametrize("raw", ["1/0", "abc", 0.5, True])
def test_parse_rejects(raw):
    with pytest.raises(ValueError):
        to_fraction(raw)


def test_extended_accepts_infinity_only_as_float():
    assert to_extended("inf") == INF
    assert to_extended(INF) == INF
    with pytest.raises(ValueError):
        to_extended(0.25)


def test_format():
    assert format_rational(Fraction(6)) == "6/1"
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert format_rational(INF) == "inf"


def test_zero_infinity_conventions():
    assert mul(0, INF) == 0
    assert mul(INF, Fraction(1, 3)) == INF
    assert div(0, 0) == 0
    assert div(Fraction(2), 0) == INF
    assert div(Fraction(2), INF) == 0
    assert reciprocal(0) == INF
    assert reciprocal(INF) == 0
    assert ext_sum([Fraction(1), INF, Fraction(2)]) == INF


def test_power_is_exact_for_integer_exponents():
    assert power(Fraction(2, 3), Fraction(3)) == Fraction(8, 27)
    assert is_exact(power(Fraction(2, 3), Fraction(-2)))
    assert power(Fraction(4), Fraction(1, 2)) == 2.0
    assert not is_exact(power(Fraction(4), Fraction(1, 2)))
    assert power(0, Fraction(-1)) == INF
    assert power(INF, Fraction(-1, 2)) == 0
    assert power(INF, Fraction(0)) == 1


def test_float_inputs_stay_float():
    assert isinstance(power(2.0, Fraction(2)), float)
    assert isinstance(div(1.5, Fraction(3)), float)


@given(rationals, rationals)
def test_mul_matches_fraction_product(a, b):
    assert mul(a, b) == a * b


@given(rationals, rationals)
def test_div_inverts_mul(a, b):
    if b != 0:
        assert div(mul(a, b), b) == a
