import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laurentdio.arith import format_rational, integer_sqrt_exact, parse_rational, rational_is_square
from laurentdio.poly import (
    NEG_INFINITY,
    Polynomial,
    discriminant,
    exact_div,
    poly_divrem,
    poly_eval,
    poly_gcd,
    poly_sqrt,
    resultant,
)
from laurentdio.ratfunc import RationalFunction, indeterminate
from oracles import sylvester_resultant
from strategies import nonzero_polynomials, polynomials, rationals

t = Polynomial.x()
F = Fraction


# -- rationals ----------------------------------------------------------------


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c


def test_rational_is_square_examples():
    assert rational_is_square(F(49, 9)) == F(7, 3)
    assert rational_is_square(2) is None
    assert rational_is_square(-4) is None
    assert rational_is_square(0) == 0
    # f(-110)^2 + f(-55)^2 for f = x + 1 + 22/x
    assert rational_is_square(F(-546, 5) ** 2 + F(-272, 5) ** 2) == 122
    assert rational_is_square(14884) == 122


@given(st.integers(min_value=0, max_value=10 ** 40))
def test_integer_sqrt_exact(n):
    r = integer_sqrt_exact(n * n)
    assert r == n
    if n > 1:
        assert integer_sqrt_exact(n * n + 1) is None


def test_rational_text_round_trip():
    for q in (F(3), F(-7, 2), F(0)):
        assert parse_rational(format_rational(q)) == q
    assert format_rational(F(6, 3)) == "2"
    assert format_rational(F(-1, 3)) == "-1/3"
    with pytest.raises(ValueError):
        parse_rational("1/0")


# -- polynomial arithmetic -----------------------------------------------------


def test_arith_examples():
    assert (t + 1) * (t - 1) == t ** 2 - 1
    p = 3 * t ** 2 - t + F(1, 2)
    assert p + (-p) == Polynomial()
    assert (p + (-p)).degree is NEG_INFINITY
    q = (t ** 2 + 1) + (-(t ** 2))
    assert q == 1 and q.degree == 0


def test_zero_degree_sentinel_orders_below_everything():
    assert NEG_INFINITY < 0
    assert NEG_INFINITY < -10 ** 9
    assert not (NEG_INFINITY > -1)


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(polynomials(12), polynomials(12))
def test_product_matches_schoolbook(p, q):
    # large enough to exercise the packed-integer path
    expected = [F(0)] * (len(p.coeffs) + len(q.coeffs))
    for i, a in enumerate(p.coeffs):
        for j, b in enumerate(q.coeffs):
            expected[i + j] += a * b
    assert p * q == Polynomial(expected)


def test_divrem_examples():
    assert poly_divrem(t ** 2 - 1, t - 1) == (t + 1, Polynomial())
    assert poly_divrem(t ** 3, t ** 2) == (t, Polynomial())
    with pytest.raises(ZeroDivisionError):
        poly_divrem(t, Polynomial())


@given(polynomials(8), nonzero_polynomials(5))
def test_divrem_round_trip(p, q):
    quo, rem = poly_divrem(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


def test_exact_div():
    assert exact_div((t + 2) * (t - 3), t - 3) == t + 2
    with pytest.raises(ArithmeticError):
        exact_div(t ** 2 + 1, t - 1)


def test_gcd_examples():
    assert poly_gcd(t ** 2 - 1, t - 1) == t - 1
    assert poly_gcd(t ** 2 + 1, t) == 1
    p = 3 * t ** 2 + 6
    assert poly_gcd(p, Polynomial()) == p.monic()
    with pytest.raises(ValueError):
        poly_gcd(Polynomial(), Polynomial())


@given(nonzero_polynomials(4), nonzero_polynomials(4), nonzero_polynomials(3))
@settings(max_examples=60)
def test_gcd_divides_and_is_maximal(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.lc == 1
    assert not poly_divrem(a * c, g)[1] and not poly_divrem(b * c, g)[1]
    # c divides both, so it divides the gcd
    assert not poly_divrem(g, c)[1]


# -- resultants and discriminants ---------------------------------------------


def test_resultant_examples():
    alpha, beta = F(3, 2), F(-5)
    assert resultant(t - alpha, t - beta) == alpha - beta
    assert resultant(t ** 2 + 1, t) == 1
    assert resultant(t ** 2 - 1, t - 1) == 0


def test_resultant_against_sylvester_random():
    rng = random.Random(20260117)
    for _ in range(50):
        dp, dq = rng.randint(1, 6), rng.randint(1, 6)
        p = Polynomial([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(dp)] + [F(rng.randint(1, 9))])
        q = Polynomial([F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(dq)] + [F(-rng.randint(1, 9))])
        assert resultant(p, q) == sylvester_resultant(p, q)


@given(nonzero_polynomials(6), nonzero_polynomials(6))
@settings(max_examples=80)
def test_resultant_property_vs_sylvester(p, q):
    if p.degree == 0 and q.degree == 0:
        return
    assert resultant(p, q) == sylvester_resultant(p, q)


def test_resultant_over_function_field():
    T = indeterminate()
    p = Polynomial((T, 1))          # x + T
    q = Polynomial((-T * T, 0, 1))  # x^2 - T^2
    assert resultant(p, q) == 0
    assert resultant(Polynomial((T, 1)), Polynomial((1, T))) == 1 - T * T


def test_discriminant_examples():
    assert discriminant(t ** 2 + 3 * t + 2) == 1
    assert discriminant((t - 1) ** 2) == 0
    # cubic t^3 + a t + b: -4a^3 - 27b^2
    assert discriminant(t ** 3 - 2 * t + 5) == -4 * (-2) ** 3 - 27 * 25
    with pytest.raises(ValueError):
        discriminant(t + 1)


def test_discriminant_of_product_spot_checks():
    rng = random.Random(7)
    for _ in range(15):
        p = Polynomial([F(rng.randint(-5, 5)) for _ in range(3)] + [F(1)])
        q = Polynomial([F(rng.randint(-5, 5)) for _ in range(2)] + [F(1)])
        if discriminant(p * q) != 0:
            assert discriminant(p) != 0 and discriminant(q) != 0 and resultant(p, q) != 0
        # disc(pq) = disc(p) disc(q) Res(p, q)^2 for monic p, q
        assert discriminant(p * q) == discriminant(p) * discriminant(q) * resultant(p, q) ** 2


def test_eval_examples():
    assert poly_eval(t ** 2 + 1, 0) == 1
    assert poly_eval(Polynomial(), F(7, 3)) == 0
    assert (2 * t ** 3 - t)(F(1, 2)) == F(-1, 4)


@given(polynomials(5))
def test_poly_sqrt_of_square(p):
    r = poly_sqrt(p * p)
    assert r is not None and r * r == p * p


def test_poly_sqrt_rejects_non_squares():
    assert poly_sqrt(t ** 2 + 1) is None
    assert poly_sqrt(-(t ** 2)) is None


def test_text_encoding():
    assert (t ** 2 - F(1, 2) * t + 3).to_text("t") == "t^2 - 1/2*t + 3"


# -- rational functions --------------------------------------------------------


def test_rational_function_canonical_form():
    r = RationalFunction(2 * t ** 2 - 2, 4 * t - 4)
    assert r.num == F(1, 2) * t + F(1, 2)
    assert r.den == 1
    s = RationalFunction(t, 3 * t ** 2 + 3)
    assert s.den.lc == 1
    assert s.normalize() == s.normalize().normalize() == s


@given(polynomials(4), nonzero_polynomials(4), polynomials(4), nonzero_polynomials(4))
@settings(max_examples=60)
def test_rational_function_field_ops(a, b, c, d):
    x, y = RationalFunction(a, b), RationalFunction(c, d)
    assert (x + y) - y == x
    assert (x * y) == RationalFunction(a * c, b * d)
    if y:
        assert (x / y) * y == x
    assert poly_gcd(x.num, x.den) == 1 if x.num else x.den == 1


def test_rational_function_eval_and_pole():
    T = indeterminate()
    r = (T ** 2 + 1) / (T - 2)
    assert r(F(3)) == 10
    with pytest.raises(ZeroDivisionError):
        r(2)
    assert (T / (T + 1)).sqrt() is None
    assert ((T + 1) ** 2 / T ** 4).sqrt() == (T + 1) / T ** 2


def test_rational_function_text():
    T = indeterminate()
    assert ((T + 1) / (T ** 2)).to_text() == "(T + 1)/(T^2)"
    assert (2 * T).to_text() == "2*T"
