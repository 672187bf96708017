"""The rational function field Q(T).

Elements are kept canonical: ``gcd(num, den) == 1`` and ``den`` monic, so
equality is structural and hashing is consistent with ``Fraction`` for
constants.
"""

from __future__ import annotations

from fractions import Fraction

from laurentdio.poly import Polynomial, exact_div, poly_gcd, poly_sqrt

_ONE = Polynomial((1,))


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            num = Polynomial((num,))
        if den is None:
            den = _ONE
        elif not isinstance(den, Polynomial):
            den = Polynomial((den,))
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            self.num, self.den = Polynomial(), _ONE
            return
        if len(den.coeffs) > 1:
            g = poly_gcd(num, den)
            if len(g.coeffs) > 1:
                num = exact_div(num, g)
                den = exact_div(den, g)
        lc = den.coeffs[-1]
        if lc != 1:
            num = num / lc
            den = den.monic()
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def indeterminate(cls):
        return cls._raw(Polynomial((0, 1)), _ONE)

    @classmethod
    def from_polynomial(cls, p):
        return cls._raw(Polynomial(p), _ONE)

    def normalize(self):
        return RationalFunction(self.num, self.den)

    # -- predicates --------------------------------------------------------

    def is_polynomial(self):
        return len(self.den.coeffs) == 1

    def is_constant(self):
        return self.is_polynomial() and len(self.num.coeffs) <= 1

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_polynomial() and self.num == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.num.coeff(0))
        return hash((self.num.coeffs, self.den.coeffs))

    # -- field operations --------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction._raw(Polynomial((other,)), _ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a:
            return o
        if not c:
            return self
        if len(b.coeffs) == 1 and len(d.coeffs) == 1:
            return RationalFunction._raw(a + c, _ONE)
        if b == d:
            return RationalFunction(a + c, b)
        g = poly_gcd(b, d)
        if len(g.coeffs) == 1:
            return RationalFunction._raw_reduced(a * d + c * b, b * d)
        b1 = exact_div(b, g)
        d1 = exact_div(d, g)
        t = a * d1 + c * b1
        if not t:
            return RationalFunction._raw(Polynomial(), _ONE)
        g2 = poly_gcd(t, g)
        if len(g2.coeffs) > 1:
            t = exact_div(t, g2)
            g = exact_div(g, g2)
        return RationalFunction._raw_reduced(t, b1 * d1 * g)

    __radd__ = __add__

    @classmethod
    def _raw_reduced(cls, num, den):
        # coprime by construction; only the monic normalization is left
        if not num:
            return cls._raw(Polynomial(), _ONE)
        lc = den.coeffs[-1]
        if lc != 1:
            num = num / lc
            den = den.monic()
        return cls._raw(num, den)

    def __neg__(self):
        return RationalFunction._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a or not c:
            return RationalFunction._raw(Polynomial(), _ONE)
        if len(c.coeffs) == 1 and len(d.coeffs) == 1:
            return RationalFunction._raw(a * c.coeffs[0], b)
        if len(a.coeffs) == 1 and len(b.coeffs) == 1:
            return RationalFunction._raw(c * a.coeffs[0], d)
        if len(d.coeffs) > 1:
            g1 = poly_gcd(a, d)
            if len(g1.coeffs) > 1:
                a, d = exact_div(a, g1), exact_div(d, g1)
        if len(b.coeffs) > 1:
            g2 = poly_gcd(c, b)
            if len(g2.coeffs) > 1:
                c, b = exact_div(c, g2), exact_div(b, g2)
        return RationalFunction._raw_reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._raw_reduced(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise TypeError("rational function powers need an integer exponent")
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._raw(self.num ** n, self.den ** n)

    # -- evaluation and structure -----------------------------------------

    def __call__(self, value):
        """Evaluate at a rational (or substitute another element)."""
        den = self.den(value)
        if den == 0:
            raise ZeroDivisionError(f"pole of the rational function at {value}")
        return self.num(value) / den

    def sqrt(self):
        """Square root in Q(T), or ``None`` if this is not a square."""
        n = poly_sqrt(self.num)
        if n is None:
            return None
        d = poly_sqrt(self.den)
        if d is None:
            return None
        return RationalFunction._raw(n, d)

    def leading_sign(self):
        """Sign of the leading coefficient of the numerator (``den`` is monic)."""
        lc = self.num.lc
        return (lc > 0) - (lc < 0)

    def polynomial(self):
        if not self.is_polynomial():
            raise ValueError("rational function is not a polynomial")
        return self.num

    def to_text(self, var="T"):
        num = self.num.to_text(var)
        if self.is_polynomial():
            return num
        den = self.den.to_text(var)
        if len(self.num.coeffs) > 1 and " " in num:
            num = f"({num})"
        if " " in den or "*" in den or "^" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RationalFunction({self.to_text()!r})"


def indeterminate():
    """The transcendental generator ``T`` of Q(T)."""
    return RationalFunction.indeterminate()
