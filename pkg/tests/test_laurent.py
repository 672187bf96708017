from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from laurentdio.laurent import (
    MINUS,
    PLUS,
    LaurentPolynomial,
    laurent_eval,
    laurent_to_fraction,
    nontriviality_check,
    parse_laurent,
    reciprocal_transform,
)
from laurentdio.poly import Polynomial
from strategies import nonzero_rationals, rationals

F = Fraction
x = Polynomial.x()

laurents = st.dictionaries(st.integers(-4, 4), rationals, max_size=5).map(LaurentPolynomial)


def test_eval_examples():
    assert laurent_eval(LaurentPolynomial.linear_shape(1, 4), -4) == -4
    assert laurent_eval(LaurentPolynomial.linear_shape(1, 22), -110) == F(-546, 5)
    with pytest.raises(ZeroDivisionError):
        laurent_eval(LaurentPolynomial.linear_shape(2, 3), 0)


def test_zero_coefficients_are_dropped():
    f = LaurentPolynomial({2: 1, 1: 0, -1: F(3, 2)})
    assert f.terms == {2: 1, -1: F(3, 2)}


def test_shapes_reject_zero_and_non_integers():
    with pytest.raises(ValueError):
        LaurentPolynomial.linear_shape(0, 1)
    with pytest.raises(ValueError):
        LaurentPolynomial.quadratic_shape(1, F(1, 2), 3, integral=True)
    assert LaurentPolynomial.reciprocal_shape(1, 2, 3).terms == {1: 1, 0: 1, -1: 2, -2: 3}


def test_to_fraction_examples():
    b, c, d = F(2), F(-3), F(5)
    assert laurent_to_fraction(LaurentPolynomial.linear_shape(b, c)) == (x ** 2 + b * x + c, 1)
    assert laurent_to_fraction(LaurentPolynomial.quadratic_shape(b, c, d)) == (x ** 3 + b * x ** 2 + c * x + d, 1)
    assert laurent_to_fraction(LaurentPolynomial({0: 5})) == (Polynomial((5,)), 0)


@given(laurents, nonzero_rationals)
def test_eval_agrees_with_fraction_form(f, v):
    num, pole = laurent_to_fraction(f)
    assert laurent_eval(f, v) == num(v) / v ** pole
    if pole:
        assert num(0) != 0


def test_reciprocal_examples():
    b, c, d = F(2), F(-3), F(5)
    g, scale = reciprocal_transform(LaurentPolynomial.quadratic_shape(b, c, d))
    assert scale == d
    assert g == LaurentPolynomial({1: 1, 0: c / d, -1: b / d, -2: 1 / d})
    g, scale = reciprocal_transform(LaurentPolynomial.linear_shape(b, c))
    assert scale == c and g == LaurentPolynomial({1: 1, 0: b / c, -1: 1 / c})


@given(laurents.filter(bool), nonzero_rationals)
def test_reciprocal_identity_and_involution(f, u):
    g, scale = reciprocal_transform(f)
    assert scale * laurent_eval(g, u) == laurent_eval(f, 1 / u)
    assert g.leading_coefficient == 1
    back, s2 = reciprocal_transform(g)
    # f(u) = scale * g(1/u) = scale * s2 * back(u)
    assert laurent_eval(back, u) * s2 * scale == laurent_eval(f, u)


def test_nontriviality_examples():
    f6 = LaurentPolynomial.linear_shape(1, 6)
    assert nontriviality_check(f6, -6, 1, PLUS)
    f4 = LaurentPolynomial.linear_shape(1, 4)
    # x^2 + x + 4 has no rational root, so use f = x - 3 + 2/x, which vanishes at 1 and 2
    g = LaurentPolynomial.linear_shape(-3, 2)
    assert not nontriviality_check(g, 5, 1, PLUS)
    assert not nontriviality_check(f4, 3, 3, MINUS)
    assert nontriviality_check(f4, 3, 5, MINUS)
    # f(1) = f(4) for f = x + 1 + 4/x
    assert not nontriviality_check(f4, 1, 4, MINUS)


@pytest.mark.parametrize("text, terms", [
    ("x^1 + 1 + 4*x^-1", {1: 1, 0: 1, -1: 4}),
    ("x+1+4/x", {1: 1, 0: 1, -1: 4}),
    ("x^2 - 3/2*x + 1/x^2", {2: 1, 1: F(-3, 2), -2: 1}),
    ("2*x**3 - 7/x^3 + 1/2", {3: 2, -3: -7, 0: F(1, 2)}),
    ("-x", {1: -1}),
])
def test_parse(text, terms):
    assert parse_laurent(text).terms == dict(sorted(terms.items(), reverse=True))


@given(laurents.filter(bool))
def test_text_round_trip(f):
    assert parse_laurent(f.to_text()) == f


@pytest.mark.parametrize("bad", ["", "x +", "y", "x x", "3 4"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_laurent(bad)
