from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import binom, poch
from supercong.rational import (
    binomial_general,
    factorial,
    format_rational,
    parse_rational,
    rising_factorial,
)

rationals = st.builds(Fraction, st.integers(-40, 40), st.integers(1, 12))
small_k = st.integers(min_value=0, max_value=12)


def test_rising_factorial_examples():
    assert rising_factorial(Fraction(7, 3), 0) == 1
    assert rising_factorial(Fraction(1, 2), 2) == Fraction(3, 4)
    assert rising_factorial(-4, 5) == 0


def test_binomial_general_examples():
    assert binomial_general(Fraction(5, 7), 0) == 1
    assert binomial_general(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binomial_general(-3, 2) == 6


def test_factorial():
    assert factorial(0) == 1
    assert factorial(4) == 24
    acc = 1
    for i in range(1, 11):
        acc *= i
    assert factorial(10) == acc == 3628800
    with pytest.raises(ValueError):
        factorial(-1)


def test_arithmetic_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    x = Fraction(-7, 9)
    assert x + 0 == x
    r = Fraction(2, 4)
    assert (r.numerator, r.denominator) == (1, 2)
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 3) / Fraction(0)


@pytest.mark.parametrize(
    "text, value",
    [("-3", Fraction(-3)), ("5/6", Fraction(5, 6)), ("+4/8", Fraction(1, 2)), ("0", Fraction(0))],
)
def test_parse(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1 /2", "1.5", "a/b", "", "3/", "/4", " 3"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@given(rationals)
def test_format_roundtrip(r):
    s = format_rational(r)
    assert " " not in s
    assert parse_rational(s) == r
    if r.denominator == 1:
        assert "/" not in s


def test_zero_is_canonical():
    assert format_rational(Fraction(0, 5)) == "0"
    assert Fraction(0, 5).denominator == 1


@given(rationals, rationals)
def test_canonical_form_after_ops(x, y):
    results = [x + y, x - y, x * y, -x]
    if y:
        results.append(x / y)
    for r in results:
        from math import gcd

        assert r.denominator >= 1
        assert gcd(abs(r.numerator), r.denominator) == 1


@given(rationals, small_k)
def test_rising_matches_oracle(a, k):
    assert rising_factorial(a, k) == poch(a, k)


@given(rationals, small_k, small_k)
def test_pochhammer_multiplicative(a, j, k):
    assert rising_factorial(a, j + k) == rising_factorial(a, j) * rising_factorial(a + j, k)


@given(rationals, small_k)
def test_binomial_via_rising(a, k):
    assert binomial_general(a, k) == rising_factorial(a - k + 1, k) / factorial(k)
    assert binomial_general(a, k) == binom(a, k)


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_integer_agrees(n, k):
    if k <= n:
        assert binomial_general(n, k) == comb(n, k)
    else:
        assert binomial_general(n, k) == 0
