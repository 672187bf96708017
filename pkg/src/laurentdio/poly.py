"""Dense univariate polynomials over an exact field.

A polynomial is stored as a tuple of coefficients, index = exponent, with no
trailing (high-order) zeros.  Coefficients may be any exact field element
supporting ``+ - * /`` and comparison with ``0``: :class:`fractions.Fraction`
for the rationals, :class:`laurentdio.ratfunc.RationalFunction` for Q(T).
Plain ``int`` coefficients are promoted to ``Fraction`` on construction so that
division never falls back to floats.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as igcd
from math import lcm as ilcm


class _MinusInfinity:
    """Degree of the zero polynomial; below every integer, absorbing under +."""

    __slots__ = ()

    def __repr__(self):
        return "-oo"

    def __lt__(self, other):
        return not isinstance(other, _MinusInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _MinusInfinity)

    def __add__(self, other):
        return self

    __radd__ = __add__


NEG_INFINITY = _MinusInfinity()


def _promote(c):
    if type(c) is int:
        return Fraction(c)
    return c


def _is_rational(c):
    return type(c) is Fraction


class Polynomial:
    """Immutable dense polynomial ``sum(coeffs[i] * x**i)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Polynomial):
            self.coeffs = coeffs.coeffs
            return
        cs = [_promote(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs):
        # caller guarantees canonical tuple
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff, exponent):
        return cls([0] * exponent + [coeff])

    # -- basic accessors -------------------------------------------------

    @property
    def degree(self):
        n = len(self.coeffs)
        return n - 1 if n else NEG_INFINITY

    @property
    def lc(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __getitem__(self, i):
        return self.coeff(i)

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __iter__(self):
        return iter(self.coeffs)

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if len(self.coeffs) > 1:
            return False
        try:
            return self.coeff(0) == other
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return self.to_text()

    # -- ring operations -------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        return Polynomial((other,))

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = _promote(other)
            if other == 0:
                return Polynomial()
            return Polynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        if all(map(_is_rational, a)) and all(map(_is_rational, b)):
            return Polynomial._raw(_mul_rational(a, b))
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Polynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return poly_divrem(self, self._coerce(other))[0]

    def __mod__(self, other):
        return poly_divrem(self, self._coerce(other))[1]

    def __truediv__(self, other):
        """Division by a nonzero scalar, or exact division by a polynomial."""
        if isinstance(other, Polynomial):
            return exact_div(self, other)
        other = _promote(other)
        inv = 1 / other
        return Polynomial([c * inv for c in self.coeffs])

    # -- evaluation and friends ------------------------------------------

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = 1 / lc
        return Polynomial._raw(tuple(c * inv for c in self.coeffs))

    def map_coeffs(self, fn):
        return Polynomial([fn(c) for c in self.coeffs])

    def shift(self, a):
        """Return ``p(x + a)``."""
        return self.compose(Polynomial((a, 1)))

    def compose(self, q):
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def scale_variable(self, s):
        """Return ``p(s * x)``."""
        out = []
        power = _promote(1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * s
        return Polynomial(out)

    def reverse(self, n=None):
        """Return ``x**n * p(1/x)`` (``n`` defaults to the degree)."""
        if n is None:
            n = len(self.coeffs) - 1
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Polynomial(cs[: n + 1][::-1])

    def to_text(self, var="x", *, coeff_fmt=None):
        """Exponent-sorted monomial list, highest degree first."""
        fmt = coeff_fmt or format_scalar
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            parts.append(_signed_term(c, mono, fmt))
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text


def format_scalar(c):
    if isinstance(c, Fraction):
        return str(c)
    if hasattr(c, "to_text"):
        return c.to_text()
    return str(c)


def _signed_term(c, mono, fmt):
    if _is_rational(c):
        if not mono:
            return str(c)
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"
    body = fmt(c)
    if not mono:
        return f"({body})" if " " in body else body
    return f"({body})*{mono}" if " " in body else f"{body}*{mono}"


# ---------------------------------------------------------------------------
# rational fast paths: work on integer vectors with one common denominator


def _to_integer_vector(coeffs):
    den = reduce(ilcm, (c.denominator for c in coeffs), 1)
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def _pack(ints, shift):
    # two's-complement-safe Kronecker packing via offset digits
    acc = 0
    for c in reversed(ints):
        acc = (acc << shift) + c
    return acc


def _unpack(value, shift, count):
    out = []
    mask = (1 << shift) - 1
    half = 1 << (shift - 1)
    for _ in range(count):
        digit = value & mask
        if digit >= half:
            digit -= 1 << shift
        out.append(digit)
        value = (value - digit) >> shift
    return out


def _mul_integer(a, b):
    if len(a) < 8 or len(b) < 8:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return out
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    shift = bound.bit_length() + 2
    return _unpack(_pack(a, shift) * _pack(b, shift), shift, len(a) + len(b) - 1)


def _mul_rational(a, b):
    ia, da = _to_integer_vector(a)
    ib, db = _to_integer_vector(b)
    prod = _mul_integer(ia, ib)
    den = da * db
    out = [Fraction(c, den) for c in prod]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _primitive_integer(coeffs):
    ints, _ = _to_integer_vector(coeffs)
    g = reduce(igcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _integer_divides(num, den):
    """Exact quotient of integer polynomials, or None."""
    num = list(num)
    dl = den[-1]
    n, m = len(num), len(den)
    if n < m:
        return None
    q = [0] * (n - m + 1)
    for k in range(n - m, -1, -1):
        top = num[k + m - 1]
        if top % dl:
            return None
        qk = top // dl
        q[k] = qk
        if qk:
            for j in range(m):
                num[k + j] -= qk * den[j]
    if any(num[: m - 1]):
        return None
    return q


def _heuristic_gcd(a, b):
    """GCDHEU on primitive integer polynomials; None when it gives up."""
    if len(a) == 1 or len(b) == 1:
        return [1]
    ca = max(map(abs, a))
    cb = max(map(abs, b))
    xi = 2 * min(ca, cb) + 29
    for _ in range(6):
        va = _eval_integer(a, xi)
        vb = _eval_integer(b, xi)
        gv = igcd(va, vb)
        cand = _interpolate_integer(gv, xi)
        if cand and cand[-1] != 0:
            g = reduce(igcd, cand, 0)
            cand = [c // g for c in cand]
            if cand[-1] < 0:
                cand = [-c for c in cand]
            if _integer_divides(a, cand) is not None and _integer_divides(b, cand) is not None:
                return cand
        xi = xi * 73794 // 27011
    return None


def _eval_integer(p, xi):
    acc = 0
    for c in reversed(p):
        acc = acc * xi + c
    return acc


def _interpolate_integer(v, xi):
    out = []
    half = xi // 2
    while v:
        digit = v % xi
        if digit > half:
            digit -= xi
        out.append(digit)
        v = (v - digit) // xi
    return out


def _rational_gcd(a, b):
    pa = _primitive_integer(a)
    pb = _primitive_integer(b)
    g = _heuristic_gcd(pa, pb)
    if g is None:
        return None
    lc = g[-1]
    return tuple(Fraction(c, lc) for c in g)


# ---------------------------------------------------------------------------
# division, gcd, resultant, discriminant


def poly_divrem(num, den):
    """Euclidean division ``num = q*den + r`` with ``deg r < deg den``."""
    if not den.coeffs:
        raise ZeroDivisionError("division by the zero polynomial")
    n, m = len(num.coeffs), len(den.coeffs)
    if n < m:
        return Polynomial(), num
    rem = list(num.coeffs)
    dl = den.coeffs[-1]
    inv = 1 / dl
    q = [Fraction(0)] * (n - m + 1)
    dc = den.coeffs
    for k in range(n - m, -1, -1):
        top = rem[k + m - 1]
        if top == 0:
            continue
        qk = top * inv
        q[k] = qk
        for j in range(m - 1):
            rem[k + j] = rem[k + j] - qk * dc[j]
        rem[k + m - 1] = Fraction(0)
    return Polynomial(q), Polynomial(rem[: m - 1])


def exact_div(num, den):
    """Quotient of an exact polynomial division; raises if a remainder is left."""
    q, r = poly_divrem(num, den)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


def poly_gcd(a, b):
    """Monic greatest common divisor."""
    if not a.coeffs and not b.coeffs:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not a.coeffs:
        return b.monic()
    if not b.coeffs:
        return a.monic()
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        return Polynomial((1,))
    if all(map(_is_rational, a.coeffs)) and all(map(_is_rational, b.coeffs)):
        g = _rational_gcd(a.coeffs, b.coeffs)
        if g is not None:
            return Polynomial._raw(g)
    if len(a.coeffs) < len(b.coeffs):
        a, b = b, a
    a, b = a.monic(), b.monic()
    while b.coeffs:
        a, b = b, poly_divrem(a, b)[1].monic()
    return a


def pseudo_remainder(a, b):
    """``lc(b)**(deg a - deg b + 1) * a  mod  b`` computed without division."""
    r = list(a.coeffs)
    m = len(b.coeffs)
    lc = b.coeffs[-1]
    delta = len(r) - m + 1
    if delta <= 0:
        return a
    bc = b.coeffs
    for _ in range(delta):
        if len(r) < m:
            r = [c * lc for c in r]
            continue
        top = r[-1]
        head = [c * lc for c in r[:-1]]
        off = len(r) - m
        for j in range(m - 1):
            head[off + j] = head[off + j] - top * bc[j]
        r = head
        while r and r[-1] == 0:
            r.pop()
    return Polynomial(r)


def resultant(a, b):
    """Resultant via the subresultant pseudo-remainder sequence.

    Every intermediate division is exact, so coefficients stay polynomial
    when they live in Q(T) and the computation never needs a gcd.
    """
    if not a.coeffs or not b.coeffs:
        raise ValueError("resultant of a zero polynomial")
    da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
    if da == 0:
        return a.coeffs[0] ** db
    if db == 0:
        return b.coeffs[0] ** da
    sign = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            sign = -1
    g = h = _promote(1)
    while True:
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = pseudo_remainder(a, b)
        if not r.coeffs:
            return Fraction(0)
        a = b
        divisor = g * h ** delta
        b = r / divisor
        g = a.coeffs[-1]
        if delta == 1:
            h = g
        elif delta > 1:
            h = g ** delta / h ** (delta - 1)
        da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
        if db == 0:
            if da == 1:
                return sign * b.coeffs[0]
            return sign * b.coeffs[0] ** da / h ** (da - 1)


def discriminant(p):
    """``(-1)**(n(n-1)/2) * Res(p, p') / lc(p)``."""
    n = len(p.coeffs) - 1
    if n < 2:
        raise ValueError("discriminant needs degree at least 2")
    res = resultant(p, p.derivative())
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * res / p.coeffs[-1]


def poly_eval(p, x):
    return p(x)


def poly_sqrt(p):
    """Square root in Q[x] (positive leading coefficient), or ``None``."""
    from laurentdio.arith import rational_is_square

    if not p.coeffs:
        return p
    n = len(p.coeffs) - 1
    if n % 2:
        return None
    top = rational_is_square(p.coeffs[-1])
    if top is None:
        return None
    half = n // 2
    # top-down solve for coefficients of s with s*s == p
    s = [Fraction(0)] * (half + 1)
    s[half] = top
    two_top = 2 * top
    for k in range(1, half + 1):
        idx = n - k
        acc = p.coeffs[idx]
        for i in range(half - k + 1, half):
            j = idx - i
            if half - k < j <= half:
                acc -= s[i] * s[j]
        s[half - k] = acc / two_top
    root = Polynomial(s)
    if root * root != p:
        return None
    return root
