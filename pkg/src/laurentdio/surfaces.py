"""Equation surfaces obtained from ``z^2 = f(x)^2 +- f(y)^2`` by substitution.

Two families are handled:

* ``f = x + b + c/x`` with ``x = T, y = tT``: a quartic in ``t`` over Q(T);
* ``f = x^2 + b x + c + d/x`` with ``y = tx``: a sextic in ``x`` over Q(t),
  which collapses to ``(x + b)^2`` times a quartic once ``t = k``,
  ``c = -k^2 b^2`` and ``d = bc``.

All surfaces are computed from ``f`` by polynomial arithmetic; the
transcribed closed forms only enter through the check suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from laurentdio import closed_forms
from laurentdio.arith import rational_is_square
from laurentdio.curves import QuarticCurve
from laurentdio.laurent import LaurentPolynomial, PLUS, laurent_to_fraction, sign_factor
from laurentdio.poly import Polynomial, discriminant, poly_divrem
from laurentdio.ratfunc import RationalFunction, indeterminate


def _q(x):
    return Fraction(x) if isinstance(x, int) else x


@dataclass(frozen=True)
class Theorem1Params:
    """``f(x) = x + b + c/x`` with ``b c != 0``."""

    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))
        if self.b == 0 or self.c == 0:
            raise ValueError("need b != 0 and c != 0")

    @property
    def f(self):
        return LaurentPolynomial.linear_shape(self.b, self.c)


@dataclass(frozen=True)
class Theorem2Params:
    """``f(x) = (x + b)(x - bk)(x + bk)/x`` with ``k = (r^2 - 1)/(2r)``.

    ``r`` may be a rational other than ``0, 1, -1`` or the indeterminate of
    Q(r) for symbolic work.
    """

    b: Fraction
    r: object

    def __post_init__(self):
        object.__setattr__(self, "b", Fraction(self.b))
        r = _q(self.r)
        object.__setattr__(self, "r", r)
        if self.b == 0:
            raise ValueError("need b != 0")
        if not isinstance(r, RationalFunction) and r in (0, 1, -1):
            raise ValueError("need r not in {0, 1, -1}")
        if self.k ** 2 + 1 != self.l ** 2:
            raise ArithmeticError("k^2 + 1 != l^2")

    @property
    def symbolic(self):
        return isinstance(self.r, RationalFunction)

    @property
    def k(self):
        return (self.r ** 2 - 1) / (2 * self.r)

    @property
    def l(self):  # noqa: E743
        return (self.r ** 2 + 1) / (2 * self.r)

    @property
    def c(self):
        return -self.k ** 2 * self.b ** 2

    @property
    def d(self):
        return self.b * self.c

    @property
    def f(self):
        if self.symbolic:
            raise ValueError("f has symbolic coefficients; specialize r first")
        return LaurentPolynomial.quadratic_shape(self.b, self.c, self.d)


# ---------------------------------------------------------------------------
# generic substitution machinery


def _pole_one(f):
    num, pole = laurent_to_fraction(f)
    if pole != 1:
        raise ValueError("surface builders need f with a simple pole at x = 0")
    return num


def build_g1(params, *, sign=PLUS, T=None, swapped=False):
    """Quartic ``g1(t)`` with ``T^2 t^2 z^2 = g1(t)`` after ``x = T, y = tT``.

    ``swapped=True`` uses ``y = T, x = tT`` instead (only different for the
    minus sign).  ``T`` defaults to the indeterminate of Q(T); a rational
    value specializes the surface.
    """
    if T is None:
        T = indeterminate()
    T = _q(T)
    num = _pole_one(params.f)
    s = sign_factor(sign)
    n_T = num(T)
    # N(tT) as a polynomial in t
    n_tT = Polynomial([c * T ** i for i, c in enumerate(num.coeffs)])
    t_sq = Polynomial.monomial(n_T * n_T, 2)
    if swapped:
        return n_tT * n_tT + s * t_sq
    return t_sq + s * (n_tT * n_tT)


def g1_curve(params, **kwargs):
    return QuarticCurve.from_polynomial(build_g1(params, **kwargs))


def build_g2(f2, *, sign=PLUS, t=None):
    """Sextic in ``x`` with ``t^2 x^2 z^2 = g2`` after ``y = t x``; coefficients live in Q(t)."""
    if t is None:
        t = indeterminate()
    t = _q(t)
    num = _pole_one(f2)
    if num.coeff(0) == 0:
        raise ValueError("degenerate f: constant of the numerator (d) vanishes")
    s = sign_factor(sign)
    n_tx = Polynomial([c * t ** i for i, c in enumerate(num.coeffs)])
    return (t * t) * (num * num) + s * (n_tx * n_tx)


def _to_t_polynomial(value):
    if isinstance(value, RationalFunction):
        return value.polynomial()
    return Polynomial((value,))


@dataclass(frozen=True)
class G2Discriminant:
    """``disc_x(g2) = -64 d^2 t^10 (t-1)^6 * h(t) * cofactor`` and ``cofactor = h(t) * i(t)``."""

    disc: Polynomial
    h: Polynomial
    cofactor: Polynomial
    i: Polynomial
    h_multiplicity: int


def disc_factorization_g2(f2):
    b, c, d = f2.coefficient(1), f2.coefficient(0), f2.coefficient(-1)
    disc = _to_t_polynomial(discriminant(build_g2(f2)))
    if not disc:
        raise ArithmeticError("discriminant of g2 vanishes identically")
    known = closed_forms.disc_g2_known_factor(d)
    h = closed_forms.h_polynomial(b, c, d)
    cofactor, rem = poly_divrem(disc, known * h)
    if rem:
        raise ArithmeticError("discriminant is not divisible by -64 d^2 t^10 (t-1)^6 h(t)")
    i, multiplicity = cofactor, 1
    q, rem = poly_divrem(i, h)
    while not rem and i.degree >= h.degree:
        i, multiplicity = q, multiplicity + 1
        q, rem = poly_divrem(i, h)
    return G2Discriminant(disc, h, cofactor, i, multiplicity)


@dataclass(frozen=True)
class HAnalysis:
    h: Polynomial
    disc_h: Fraction
    disc_h_matches_product: bool
    d_roots_verified: dict
    factorization_when_d_eq_bc: Polynomial | None
    factorization_verified: bool | None
    vanishing_t: tuple


def h_analysis(b, c, d):
    """Discriminant of the sextic factor ``h`` and its degenerations in ``d``."""
    b, c, d = Fraction(b), Fraction(c), Fraction(d)
    if 0 in (b, c, d):
        raise ValueError("need b, c, d nonzero")
    h = closed_forms.h_polynomial(b, c, d)
    dh = discriminant(h) if h.degree >= 2 else Fraction(0)
    roots = {
        "d=bc": discriminant(closed_forms.h_polynomial(b, c, b * c)) == 0,
        "d=c^3/b^3": discriminant(closed_forms.h_polynomial(b, c, c ** 3 / b ** 3)) == 0,
    }
    radicand = -(3 * c - b ** 2) ** 3
    root = rational_is_square(radicand)
    if root is None:
        roots["surd"] = None
    else:
        ok = True
        for s in (1, -1):
            dd = (9 * b * c - 2 * b ** 3 + 2 * s * root) / 27
            ok = ok and (dd == 0 or discriminant(closed_forms.h_polynomial(b, c, dd)) == 0)
        roots["surd"] = ok
    factored = verified = None
    vanishing = ()
    if d == b * c:
        factored = closed_forms.h_factored_at_bc(b, c)
        verified = factored == h
        ts = [Fraction(-1)]
        kb = rational_is_square(-c)
        if kb is not None:
            ts += [kb / b, -kb / b, b / kb, -b / kb]
        vanishing = tuple(t for t in ts if h(t) == 0)
    return HAnalysis(h, dh, dh == closed_forms.disc_h(b, c, d), roots, factored, verified, vanishing)


@dataclass(frozen=True)
class ReducedEquation:
    """``x^2 z^2 = left * right`` with ``left = (x + b)^2``."""

    left: Polynomial
    right: QuarticCurve
    f_factored: bool


def reduced_equation_k(b, k, *, sign=PLUS):
    """Exact quotient of ``x^2 (f(x)^2 +- f(kx)^2)`` by ``(x + b)^2`` for ``c = -k^2 b^2, d = bc``."""
    b, k = _q(b), _q(k)
    if b == 0 or k == 0:
        raise ValueError("need b != 0 and k != 0")
    c = -k ** 2 * b ** 2
    d = b * c
    x = Polynomial.x()
    num = Polynomial((d, c, b, 1))
    num_kx = num.scale_variable(k)
    s = sign_factor(sign)
    total = num * num + s * (num_kx * num_kx) * (1 / (k * k))
    left = (x + b) ** 2
    quartic, rem = poly_divrem(total, left)
    if rem:
        raise ArithmeticError("(x + b)^2 does not divide the specialized surface")
    factored = (x + b) * (x - b * k) * (x + b * k) == num
    return ReducedEquation(left, QuarticCurve.from_polynomial(quartic), factored)


def c2_quartic(params, *, sign=PLUS):
    """``16 r^4`` times the reduced quartic, so ``16 r^4 x^2 z^2 = (x + b)^2 * C2(x)``."""
    red = reduced_equation_k(params.b, params.k, sign=sign)
    scale = 16 * params.r ** 4
    return red.right.map_coefficients(lambda a: scale * a)
