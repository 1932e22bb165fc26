from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from adomianpoly.series import TruncatedSeries

N = 6
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=7)
series = st.lists(coeff, min_size=N + 1, max_size=N + 1).map(TruncatedSeries)


@given(series, series)
def test_commutative(a, b):
    assert a * b == b * a
    assert a + b == b + a


@given(series, series, series)
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series)
def test_identities(a):
    one = TruncatedSeries.constant(Fraction(1), N)
    zero = TruncatedSeries.zero(N)
    assert a * one == a
    assert a + zero == a
    assert a * zero == zero
    assert a - a == zero


@given(series, st.integers(0, 5))
def test_power_is_repeated_product(a, n):
    expected = TruncatedSeries.constant(Fraction(1), N)
    for _ in range(n):
        expected = expected * a
    assert a**n == expected


def test_truncation_matches_full_product():
    a = TruncatedSeries([1.0, 2.0, 3.0], order=2)
    b = TruncatedSeries([4.0, 5.0, 6.0], order=2)
    full = np.convolve([1, 2, 3], [4, 5, 6])
    assert list((a * b).coefficients) == list(full[:3])


def test_constructor_pads_and_truncates():
    assert TruncatedSeries([1, 2, 3, 4], order=1).coefficients == (1, 2)
    assert TruncatedSeries([1], order=3).coefficients == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        TruncatedSeries([])


def test_mismatched_orders():
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2]) + TruncatedSeries([1, 2, 3])


def test_integrate_twice():
    one = TruncatedSeries.constant(Fraction(1), 4)
    assert one.integrate_twice().coefficients == (0, 0, Fraction(1, 2), 0, 0)
    t2 = TruncatedSeries.monomial(Fraction(1), 2, 4)
    assert t2.integrate_twice()[4] == Fraction(1, 12)
    # degree 3 -> 5 falls off the end
    assert TruncatedSeries.monomial(Fraction(1), 3, 4).integrate_twice() == TruncatedSeries.zero(4)


def test_integrate_twice_int_coefficients_stay_exact():
    s = TruncatedSeries([1, 0, 0, 0])
    assert s.integrate_twice()[2] == Fraction(1, 2)


@given(series)
def test_derivative_inverts_double_integral(a):
    back = a.integrate_twice().derivative().derivative()
    assert back.coefficients[: N - 1] == a.coefficients[: N - 1]


def test_evaluate():
    s = TruncatedSeries([1.0, -2.0, 0.5])
    assert s.evaluate(2.0) == 1.0 - 4.0 + 2.0
    assert np.allclose(s(np.array([0.0, 1.0])), [1.0, -0.5])
    assert TruncatedSeries.zero(3, exact=False).evaluate(7.0) == 0.0


def test_valuation():
    assert TruncatedSeries([0, 0, 3, 1]).valuation() == 2
    assert TruncatedSeries.zero(3).valuation() is None


def test_scalar_mixing():
    s = TruncatedSeries([Fraction(1), Fraction(2)])
    assert (Fraction(1, 2) * s).coefficients == (Fraction(1, 2), Fraction(1))
    assert (s + 1).coefficients == (2, 2)
    assert (1 - s).coefficients == (0, -2)
