"""Quartic and short Weierstrass models over an exact field K (Q or Q(T)).

Points on a Weierstrass curve are ``(X, Y)`` tuples; the point at infinity is
``INFINITY`` (``None``).  Every function here is generic in K: coefficients
only need field arithmetic, ``== 0`` and, where noted, a square-root test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from laurentdio.arith import rational_is_square
from laurentdio.poly import Polynomial, discriminant
from laurentdio.ratfunc import RationalFunction

INFINITY = None

RATIONALS = "rationals"
RATIONAL_FUNCTIONS = "rational_functions"

TORSION_BOUND = 12


class CurveError(ValueError):
    pass


class NotOnCurveError(CurveError):
    pass


class SingularCurveError(CurveError):
    pass


class ExceptionalPointError(CurveError):
    """A birational map is undefined at the requested point."""


class DegenerateConstructionError(CurveError):
    pass


def field_sqrt(x):
    """Square root of ``x`` inside its own field, or ``None``."""
    if isinstance(x, RationalFunction):
        return x.sqrt()
    return rational_is_square(x) if Fraction(x) >= 0 else None


# ---------------------------------------------------------------------------
# models


@dataclass(frozen=True)
class QuarticCurve:
    """``v^2 = a4 t^4 + a3 t^3 + a2 t^2 + a1 t + a0``."""

    a4: object
    a3: object
    a2: object
    a1: object
    a0: object

    @classmethod
    def from_polynomial(cls, p):
        if p.degree > 4:
            raise ValueError("quartic model needs degree at most 4")
        return cls(p.coeff(4), p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0))

    @property
    def coefficients(self):
        return (self.a4, self.a3, self.a2, self.a1, self.a0)

    def polynomial(self):
        return Polynomial((self.a0, self.a1, self.a2, self.a3, self.a4))

    def __call__(self, t):
        return (((self.a4 * t + self.a3) * t + self.a2) * t + self.a1) * t + self.a0

    def contains(self, point):
        t, v = point
        return v * v == self(t)

    def discriminant(self):
        return discriminant(self.polynomial())

    def is_smooth(self):
        return self.polynomial().degree == 4 and self.discriminant() != 0

    def invariants(self):
        """The classical pair ``(I, J)`` of the binary quartic."""
        a, b, c, d, e = self.coefficients
        i = 12 * a * e - 3 * b * d + c * c
        j = 72 * a * c * e + 9 * b * c * d - 27 * a * d * d - 27 * e * b * b - 2 * c * c * c
        return i, j

    def map_coefficients(self, fn):
        return QuarticCurve(*(fn(c) for c in self.coefficients))


@dataclass(frozen=True)
class WeierstrassCurve:
    """``Y^2 = X^3 + A X + B``."""

    A: object
    B: object

    def __post_init__(self):
        if 4 * self.A ** 3 + 27 * self.B ** 2 == 0:
            raise SingularCurveError(f"singular Weierstrass curve A={self.A}, B={self.B}")

    @property
    def discriminant(self):
        return -16 * (4 * self.A ** 3 + 27 * self.B ** 2)

    def contains(self, point):
        if point is INFINITY:
            return True
        x, y = point
        return y * y == x * x * x + self.A * x + self.B

    def j_invariant(self):
        return j_invariant(self)

    def to_text(self, var="T"):
        return f"Y^2 = X^3 + ({_fmt(self.A, var)})*X + ({_fmt(self.B, var)})"


def _fmt(c, var):
    if isinstance(c, RationalFunction):
        return c.to_text(var)
    return str(c)


def j_invariant(E):
    four_a3 = 4 * E.A ** 3
    return 1728 * four_a3 / (four_a3 + 27 * E.B ** 2)


def isomorphism_scale(source, target):
    """Return ``u`` with ``target = (u^4 A, u^6 B)``, so ``(X, Y) -> (u^2 X, u^3 Y)``; else ``None``.

    Only the generic case ``A B != 0`` on both sides is searched, where
    ``u^2 = A B' / (A' B)`` is forced.
    """
    if source.A == 0 or source.B == 0 or target.A == 0 or target.B == 0:
        if source.A == target.A and source.B == target.B:
            return Fraction(1)
        return None
    u2 = (source.A * target.B) / (target.A * source.B)
    u = field_sqrt(u2)
    if u is None:
        return None
    u4 = u2 * u2
    if u4 * source.A != target.A or u4 * u2 * source.B != target.B:
        return None
    return u


def scale_point(point, u):
    if point is INFINITY:
        return INFINITY
    x, y = point
    u2 = u * u
    return (u2 * x, u2 * u * y)


# ---------------------------------------------------------------------------
# group law


def _check_on(E, P):
    if not E.contains(P):
        raise NotOnCurveError(f"point {P} is not on {E}")


def ec_neg(E, P):
    if P is INFINITY:
        return INFINITY
    return (P[0], -P[1])


def _add(E, P, Q):
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if y1 != y2 or y1 == 0:
            return INFINITY
        lam = (3 * x1 * x1 + E.A) / (2 * y1)
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam - x1 - x2
    y3 = lam * (x1 - x3) - y1
    return (x3, y3)


def ec_add(E, P, Q):
    """Chord-tangent sum of two points of ``E``."""
    _check_on(E, P)
    _check_on(E, Q)
    return _add(E, P, Q)


def ec_scalar_mul(E, m, P):
    """``[m]P`` by double-and-add; negative ``m`` negates."""
    _check_on(E, P)
    if m < 0:
        return ec_neg(E, _mul(E, -m, P))
    return _mul(E, m, P)


def _mul(E, m, P):
    result = INFINITY
    addend = P
    while m:
        if m & 1:
            result = _add(E, result, addend)
        m >>= 1
        if m:
            addend = _add(E, addend, addend)
    return result


def multiples(E, P, count):
    """``[P, 2P, ..., count*P]`` by repeated addition."""
    _check_on(E, P)
    out = []
    acc = INFINITY
    for _ in range(count):
        acc = _add(E, acc, P)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# Fermat's secant ansatz


def fermat_secant_point(curve, base_sqrt):
    """New point on ``v^2 = q(t)`` from the point ``(0, base_sqrt)``.

    Put ``v = p t^2 + q t + e`` with ``p^2 = a4`` and ``q = a3/(2p)``; the two top
    coefficients of ``v^2 - q(t)`` vanish and the remaining linear factor gives
    ``t``.  The branch ``p = -sqrt(a4)`` is tried first.
    """
    e = base_sqrt
    if e * e != curve.a0:
        raise DegenerateConstructionError("base_sqrt^2 differs from the constant term")
    root = field_sqrt(curve.a4) if curve.a4 != 0 else None
    if root is None:
        raise DegenerateConstructionError("leading coefficient is not a nonzero square")
    for p in (-root, root):
        q = curve.a3 / (2 * p)
        quad = q * q + 2 * p * e - curve.a2
        lin = 2 * q * e - curve.a1
        if quad == 0:
            continue
        t = -lin / quad
        if t == 0:
            continue
        v = (p * t + q) * t + e
        if v == 0:
            continue
        return (t, v)
    raise DegenerateConstructionError("both branches of the secant ansatz degenerate")


# ---------------------------------------------------------------------------
# quartic -> Weierstrass


class QuarticWeierstrassMap:
    """Birational map between ``v^2 = q(t)`` and ``Y^2 = X^3 - 27 I X - 27 J``.

    Built from a rational point ``(t0, e)`` with ``e != 0``: after ``s = t - t0``
    the quartic has constant term ``e^2`` and the classical substitution
    ``x = (2e(v+e) + d s)/s^2`` lands on a long Weierstrass model, which is then
    completed to short form.  ``(t0, e)`` goes to the point at infinity.

    Exceptional locus: forward is total on the affine quartic; backward is
    undefined where the long-model ``y`` vanishes (these are the points over
    ``t = infinity``).
    """

    def __init__(self, curve, known_point):
        t0, e = known_point
        if not curve.contains(known_point):
            raise NotOnCurveError(f"known point {known_point} is not on the quartic")
        if e == 0:
            raise DegenerateConstructionError("known point is a branch point (v = 0)")
        self.quartic = curve
        self.t0 = t0
        self.e = e
        shifted = curve.polynomial().shift(t0)
        qa, qb, qc, qd = (shifted.coeff(i) for i in (4, 3, 2, 1))
        self._qc, self._qd = qc, qd
        e2 = e * e
        a1 = qd / e
        a2 = qc - qd * qd / (4 * e2)
        a3 = 2 * e * qb
        a4 = -4 * e2 * qa
        a6 = a2 * a4
        self._long = (a1, a2, a3, a4, a6)
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        c4 = b2 * b2 - 24 * b4
        c6 = -b2 ** 3 + 36 * b2 * b4 - 216 * b6
        self._b2 = b2
        self.target = WeierstrassCurve(-27 * c4 / 16, -27 * c6 / 32)

    def _to_short(self, x, y):
        a1, _, a3, _, _ = self._long
        return (9 * x + 3 * self._b2 / 4, 27 * (2 * y + a1 * x + a3) / 2)

    def _to_long(self, X, Y):
        a1, _, a3, _, _ = self._long
        x = (X - 3 * self._b2 / 4) / 9
        y = ((2 * Y) / 27 - a1 * x - a3) / 2
        return x, y

    def forward(self, point):
        if not self.quartic.contains(point):
            raise NotOnCurveError(f"{point} is not on the quartic")
        t, v = point
        e, qc, qd = self.e, self._qc, self._qd
        s = t - self.t0
        if s == 0:
            if v == e:
                return INFINITY
            a1, a2, a3, _, _ = self._long
            return self._to_short(-a2, a1 * a2 - a3)
        w = v + e
        x = (2 * e * w + qd * s) / (s * s)
        y = (4 * e * e * w + 2 * e * (qd * s + qc * s * s) - qd * qd * s * s / (2 * e)) / (s * s * s)
        return self._to_short(x, y)

    def backward(self, point):
        if not self.target.contains(point):
            raise NotOnCurveError(f"{point} is not on {self.target}")
        if point is INFINITY:
            return (self.t0, self.e)
        x, y = self._to_long(*point)
        if y == 0:
            raise ExceptionalPointError(f"{point} lies over t = infinity")
        e, qc, qd = self.e, self._qc, self._qd
        s = (2 * e * (x + qc) - qd * qd / (2 * e)) / y
        v = -e + s * (s * x - qd) / (2 * e)
        return (self.t0 + s, v)


def quartic_to_weierstrass(curve, known_point):
    """Return ``(E, phi)`` with ``E: Y^2 = X^3 - 27 I X - 27 J`` and ``phi`` the birational map."""
    if not curve.is_smooth():
        raise SingularCurveError("quartic model is singular (zero discriminant)")
    phi = QuarticWeierstrassMap(curve, known_point)
    return phi.target, phi


FORWARD = "forward"
BACKWARD = "backward"


def apply_birational_map(phi, point, direction):
    if direction == FORWARD:
        return phi.forward(point)
    if direction == BACKWARD:
        return phi.backward(point)
    raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")


# ---------------------------------------------------------------------------
# order tests


INFINITE = "infinite"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class OrderVerdict:
    verdict: str
    reason: str
    multiple: int | None = None

    @property
    def infinite(self):
        return self.verdict == INFINITE


def _is_integral(c):
    return Fraction(c).denominator == 1


def infinite_order_test(E, P, field_kind):
    """Sufficient tests for ``P`` to have infinite order.

    Over Q(T) with polynomial coefficients, torsion points have polynomial
    coordinates, so a non-polynomial ``X`` of ``P`` or ``[2]P`` decides.  Over Q
    two routes run: integrality of the multiples ``[m]P`` (integral models only)
    and the torsion-order bound 12.
    """
    _check_on(E, P)
    if P is INFINITY:
        return OrderVerdict(UNKNOWN, "point at infinity")
    if field_kind == RATIONAL_FUNCTIONS:
        for c in (E.A, E.B):
            if not (isinstance(c, RationalFunction) and c.is_polynomial()) and not isinstance(c, (int, Fraction)):
                raise ValueError("function-field test needs polynomial curve coefficients")
        for m, Q in ((1, P), (2, _add(E, P, P))):
            if Q is INFINITY:
                return OrderVerdict(UNKNOWN, "torsion multiple", m)
            X = Q[0]
            if isinstance(X, RationalFunction) and not X.is_polynomial():
                return OrderVerdict(INFINITE, "non-polynomial X-coordinate", m)
        return OrderVerdict(UNKNOWN, "polynomial coordinates")
    if field_kind != RATIONALS:
        raise ValueError(f"unknown field kind {field_kind!r}")
    integral_model = _is_integral(E.A) and _is_integral(E.B)
    chain = multiples(E, P, TORSION_BOUND)
    for m, Q in enumerate(chain, start=1):
        if Q is INFINITY:
            return OrderVerdict(UNKNOWN, "torsion point", m)
        if integral_model and not (_is_integral(Q[0]) and _is_integral(Q[1])):
            return OrderVerdict(INFINITE, "non-integral multiple", m)
    return OrderVerdict(INFINITE, "no multiple up to 12 vanishes", TORSION_BOUND)
