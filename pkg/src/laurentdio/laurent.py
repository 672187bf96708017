"""Laurent polynomials ``f(x) = sum a_k x^k`` over Q, possibly with negative exponents."""

from __future__ import annotations

import re
from fractions import Fraction

from laurentdio.poly import Polynomial

PLUS = "plus"
MINUS = "minus"
SIGNS = (PLUS, MINUS)


def sign_factor(sign):
    if sign == PLUS:
        return 1
    if sign == MINUS:
        return -1
    raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")


class LaurentPolynomial:
    """Finite map exponent -> nonzero rational coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        clean = {}
        for e, c in dict(terms).items():
            if not isinstance(e, int):
                raise TypeError("exponents must be integers")
            c = Fraction(c)
            if c != 0:
                clean[e] = c
        self.terms = dict(sorted(clean.items(), reverse=True))

    # -- named shapes, leading coefficient 1 ------------------------------

    @classmethod
    def linear_shape(cls, b, c, *, integral=False):
        """``x + b + c/x``."""
        _check_shape(integral, b=b, c=c)
        return cls({1: 1, 0: b, -1: c})

    @classmethod
    def quadratic_shape(cls, b, c, d, *, integral=False):
        """``x^2 + b x + c + d/x``."""
        _check_shape(integral, b=b, c=c, d=d)
        return cls({2: 1, 1: b, 0: c, -1: d})

    @classmethod
    def reciprocal_shape(cls, b, c, d, *, integral=False):
        """``x + b + c/x + d/x^2``."""
        _check_shape(integral, b=b, c=c, d=d)
        return cls({1: 1, 0: b, -1: c, -2: d})

    # -- structure ----------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __repr__(self):
        return f"LaurentPolynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    @property
    def max_exponent(self):
        return max(self.terms) if self.terms else 0

    @property
    def min_exponent(self):
        return min(self.terms) if self.terms else 0

    @property
    def leading_coefficient(self):
        return self.terms[self.max_exponent] if self.terms else Fraction(0)

    def coefficient(self, k):
        return self.terms.get(k, Fraction(0))

    @property
    def has_pole(self):
        return bool(self.terms) and self.min_exponent < 0

    def scaled(self, s):
        s = Fraction(s)
        return LaurentPolynomial({e: c * s for e, c in self.terms.items()})

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x):
        return laurent_eval(self, x)

    def to_text(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.terms.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = f"x^{e}"
            else:
                body = f"{mag}*x^{e}"
            pieces.append(("-" if c < 0 else "+", body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for s, body in pieces[1:]:
            text += f" {s} {body}"
        return text

    @classmethod
    def parse(cls, text):
        return parse_laurent(text)


def _check_shape(integral, **coeffs):
    for name, v in coeffs.items():
        if Fraction(v) == 0:
            raise ValueError(f"coefficient {name} must be nonzero")
        if integral and Fraction(v).denominator != 1:
            raise ValueError(f"coefficient {name} must be an integer")


def laurent_eval(f, x):
    """Exact value of ``f`` at ``x``.

    ``x`` may be a ``Fraction``/``int`` or any field element with integer powers
    (a ``RationalFunction`` for parametric solutions).
    """
    if isinstance(x, int):
        x = Fraction(x)
    if f.has_pole and x == 0:
        raise ZeroDivisionError("Laurent polynomial evaluated at its pole x = 0")
    acc = Fraction(0)
    for e, c in f.terms.items():
        acc = acc + c * x ** e
    return acc


def laurent_to_fraction(f):
    """Return ``(num, pole_order)`` with ``f(x) = num(x) / x**pole_order``."""
    if not f.terms:
        return Polynomial(), 0
    pole = max(0, -f.min_exponent)
    coeffs = [Fraction(0)] * (f.max_exponent + pole + 1)
    for e, c in f.terms.items():
        coeffs[e + pole] = c
    return Polynomial(coeffs), pole


def reciprocal_transform(f):
    """Return ``(g, scale)`` with ``scale * g(u) == f(1/u)`` and ``g`` of leading coefficient 1."""
    if not f.terms:
        raise ValueError("reciprocal transform of the zero Laurent polynomial")
    flipped = {-e: c for e, c in f.terms.items()}
    scale = flipped[max(flipped)]
    g = LaurentPolynomial({e: c / scale for e, c in flipped.items()})
    return g, scale


def nontriviality_check(f, x, y, sign, g=None):
    """Nontrivial means ``f(x) f(y) != 0`` for plus, ``f(x)^2 != f(y)^2`` for minus.

    ``g`` replaces ``f`` on the ``y`` side when given (mixed surfaces).
    """
    fx = laurent_eval(f, x)
    fy = laurent_eval(g if g is not None else f, y)
    if sign_factor(sign) > 0:
        return fx != 0 and fy != 0
    return fx * fx != fy * fy


# -- text format -------------------------------------------------------------

_TERM = re.compile(
    r"""
    (?P<sign>[+-])?\s*
    (?:
        (?P<coef>\d+(?:/\d+)?)\s*
        (?:
            (?P<mul>\*)\s*x(?:\s*(?:\^|\*\*)\s*(?P<e1>[+-]?\d+))?
          | (?P<div>/)\s*x(?:\s*(?:\^|\*\*)\s*(?P<e2>\d+))?
        )?
      | x(?:\s*(?:\^|\*\*)\s*(?P<e3>[+-]?\d+))?
    )
    \s*""",
    re.VERBOSE,
)


def parse_laurent(text):
    """Parse e.g. ``"x^1 + 1 + 4*x^-1"``, ``"x+1+4/x"``, ``"x^2 - 3/2*x + 1/x^2"``."""
    src = text.strip()
    if not src:
        raise ValueError("empty Laurent polynomial")
    terms = {}
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos or (not first and m.group("sign") is None):
            raise ValueError(f"cannot parse Laurent polynomial near {src[pos:]!r}")
        first = False
        pos = m.end()
        sgn = -1 if m.group("sign") == "-" else 1
        coef_text = m.group("coef")
        if coef_text is None:
            coef = Fraction(1)
            exp = int(m.group("e3")) if m.group("e3") is not None else 1
        else:
            coef = Fraction(coef_text)
            if m.group("mul"):
                exp = int(m.group("e1")) if m.group("e1") is not None else 1
            elif m.group("div"):
                exp = -(int(m.group("e2")) if m.group("e2") is not None else 1)
            else:
                exp = 0
        terms[exp] = terms.get(exp, Fraction(0)) + sgn * coef
    return LaurentPolynomial(terms)
