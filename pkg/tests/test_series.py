from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from blockshuffle.series import (
    FormalSeries,
    identity_series,
    named_series,
    series_atanh,
    series_compose_inverse,
    series_expm1,
    series_log1p,
    series_tanh,
)

x = sympy.Symbol("x")
DEG = 9


def sympy_coeffs(expr, degree):
    poly = sympy.series(expr, x, 0, degree + 1).removeO()
    return [Fraction(str(poly.coeff(x, k))) for k in range(degree + 1)]


@pytest.mark.parametrize(
    "make, expr",
    [
        (series_tanh, sympy.tanh(x)),
        (series_atanh, sympy.atanh(x)),
        (series_expm1, sympy.exp(x) - 1),
        (series_log1p, sympy.log(1 + x)),
    ],
)
def test_against_sympy(make, expr):
    assert make(DEG).as_list() == sympy_coeffs(expr, DEG)


def test_tanh_low_order():
    assert series_tanh(7).coeffs == {1: 1, 3: Fraction(-1, 3), 5: Fraction(2, 15), 7: Fraction(-17, 315)}


def test_inverses():
    assert series_compose_inverse(series_tanh(DEG)) == series_atanh(DEG)
    assert series_compose_inverse(series_expm1(DEG)) == series_log1p(DEG)
    assert series_tanh(DEG).compose(series_atanh(DEG)) == identity_series(DEG)


def test_errors():
    with pytest.raises(ValueError):
        series_compose_inverse(FormalSeries({2: 1}, 4))
    with pytest.raises(ZeroDivisionError):
        FormalSeries({1: 1}, 3).reciprocal()
    with pytest.raises(ValueError):
        named_series("sec", 3)
    with pytest.raises(IndexError):
        series_tanh(3)[4]


def test_reciprocal_and_division():
    one_minus = FormalSeries({0: 1, 1: -1}, 6)
    assert one_minus.reciprocal().as_list() == [1] * 7
    assert (one_minus / one_minus) == FormalSeries([1], 6)


def test_derivative_integral():
    s = series_log1p(6)
    assert s.derivative().integral() == s


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=4, max_size=6))
def test_compose_inverse_property(tail):
    coeffs = [Fraction(0), Fraction(1)] + tail
    f = FormalSeries(coeffs)
    g = series_compose_inverse(f)
    assert f.compose(g) == identity_series(f.degree)
    assert g.compose(f) == identity_series(f.degree)
