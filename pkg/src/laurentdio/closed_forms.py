"""Transcribed closed forms for the explicit constructions.

Each function takes numeric coefficients (``b``, ``c``, ``d``) and a free
argument (``T``, ``t``, ``r``) that may be a rational number or the
indeterminate of Q(T); the results are the corresponding field elements.
Nothing here is derived: these are the reference values the computed objects
are checked against.
"""

from fractions import Fraction

from laurentdio.poly import Polynomial

F = Fraction


def _q(x):
    return Fraction(x) if isinstance(x, int) else x


# -- f(x) = x + b + c/x, substitution x = T, y = tT ---------------------------


def g1_coefficients(b, c, T):
    """``(a4, a3, a2, a1, a0)`` of the quartic in ``t``."""
    b, c, T = _q(b), _q(c), _q(T)
    return (
        T ** 4,
        2 * b * T ** 3,
        T ** 4 + 2 * b * T ** 3 + 2 * b ** 2 * T ** 2 + 4 * c * T ** 2 + 2 * b * c * T + c ** 2,
        2 * b * c * T,
        c ** 2,
    )


def secant_denominator(b, c, T):
    b, c, T = _q(b), _q(c), _q(T)
    return T ** 4 + 2 * b * T ** 3 + (b ** 2 + 6 * c) * T ** 2 + 2 * b * c * T + c ** 2


def _octic_v(b, c, T):
    b, c, T = _q(b), _q(c), _q(T)
    return (
        T ** 8 + 4 * b * T ** 7 + (10 * b ** 2 + 12 * c) * T ** 6 + (12 * b ** 3 + 28 * b * c) * T ** 5
        + (5 * b ** 4 + 28 * b ** 2 * c + 38 * c ** 2) * T ** 4 + (12 * b ** 3 * c + 28 * b * c ** 2) * T ** 3
        + (10 * b ** 2 * c ** 2 + 12 * c ** 3) * T ** 2 + 4 * b * c ** 3 * T + c ** 4
    )


def secant_point(b, c, T):
    """The second point ``(t, v)`` on the quartic produced from ``(0, c)``."""
    b, c, T = _q(b), _q(c), _q(T)
    den = secant_denominator(b, c, T)
    return (-4 * b * c * T / den, c * _octic_v(b, c, T) / den ** 2)


def e1_transcribed(b, c, T):
    """``(B1, B2)`` as transcribed; the Jacobian of the quartic is ``X^3 - B1 X + B2``."""
    b, c, T = _q(b), _q(c), _q(T)
    b1 = 27 * (
        T ** 8 + 4 * b * T ** 7 + (8 * b ** 2 + 8 * c) * T ** 6 + (8 * b ** 3 + 20 * b * c) * T ** 5
        + (4 * b ** 4 + 12 * b ** 2 * c + 30 * c ** 2) * T ** 4 + (8 * b ** 3 * c + 20 * b * c ** 2) * T ** 3
        + (8 * b ** 2 * c ** 2 + 8 * c ** 3) * T ** 2 + 4 * b * c ** 3 * T + c ** 4
    )
    b2 = 54 * (T ** 4 + 2 * b * T ** 3 + (2 * b ** 2 - 2 * c) * T ** 2 + 2 * b * c * T + c ** 2) * (
        T ** 8 + 4 * b * T ** 7 + (8 * b ** 2 + 14 * c) * T ** 6 + (8 * b ** 3 + 32 * b * c) * T ** 5
        + (4 * b ** 4 + 18 * b ** 2 * c + 42 * c ** 2) * T ** 4 + (8 * b ** 3 * c + 32 * b * c ** 2) * T ** 3
        + (8 * b ** 2 * c ** 2 + 14 * c ** 3) * T ** 2 + 4 * b * c ** 3 * T + c ** 4
    )
    return b1, b2


def image_point(b, c, T):
    """``(X, Y)`` of the image of the secant point on the Weierstrass model."""
    b, c, T = _q(b), _q(c), _q(T)
    x_poly = (
        3 * T ** 8 + 12 * b * T ** 7 + (22 * b ** 2 + 36 * c) * T ** 6 + (20 * b ** 3 + 84 * b * c) * T ** 5
        + (11 * b ** 4 + 52 * b ** 2 * c + 114 * c ** 2) * T ** 4 + (20 * b ** 3 * c + 84 * b * c ** 2) * T ** 3
        + (22 * b ** 2 * c ** 2 + 36 * c ** 3) * T ** 2 + 12 * b * c ** 3 * T + 3 * c ** 4
    )
    y_poly = (
        T ** 8 + 4 * b * T ** 7 + (8 * b ** 2 + 12 * c) * T ** 6 + (8 * b ** 3 + 28 * b * c) * T ** 5
        + (3 * b ** 4 + 16 * b ** 2 * c + 38 * c ** 2) * T ** 4 + (8 * b ** 3 * c + 28 * b * c ** 2) * T ** 3
        + (8 * b ** 2 * c ** 2 + 12 * c ** 3) * T ** 2 + 4 * b * c ** 3 * T + c ** 4
    )
    X = F(3, 4) * x_poly / (b ** 2 * T ** 2)
    Y = F(-27, 8) * secant_denominator(b, c, T) * y_poly / (b ** 3 * T ** 3)
    return X, Y


def image_x_remainder(b, c, T):
    """Remainder of the ``X`` numerator over ``(2bT)^2``: ``9 c^3 (4bT + c)``."""
    b, c, T = _q(b), _q(c), _q(T)
    return 9 * c ** 3 * (4 * b * T + c)


def family_solution(b, c, T):
    """The explicit parametric triple ``(x, y, z)``."""
    b, c, T = _q(b), _q(c), _q(T)
    den = secant_denominator(b, c, T)
    return (T, -4 * b * c * T ** 2 / den, _octic_v(b, c, T) / (4 * b * T ** 2 * den))


# -- f(x) = x^2 + b x + c + d/x, substitution y = t x --------------------------


def g2_coefficients(b, c, d, t):
    """Coefficients of ``x^6, ..., x^0`` (highest first)."""
    b, c, d, t = _q(b), _q(c), _q(d), _q(t)
    return (
        t ** 6 + t ** 2,
        2 * b * t ** 5 + 2 * b * t ** 2,
        2 * c * t ** 4 + b ** 2 * t ** 4 + 2 * c * t ** 2 + b ** 2 * t ** 2,
        2 * d * t ** 3 + 2 * b * c * t ** 3 + 2 * d * t ** 2 + 2 * b * c * t ** 2,
        4 * b * d * t ** 2 + 2 * c ** 2 * t ** 2,
        2 * c * d * t ** 2 + 2 * c * d * t,
        d ** 2 * t ** 2 + d ** 2,
    )


def h_polynomial(b, c, d):
    """The palindromic sextic factor of the discriminant, as a polynomial in ``t``."""
    b, c, d = _q(b), _q(c), _q(d)
    h1 = 3 * d ** 2 - b * c * d
    h2 = 6 * d ** 2 - 5 * b * c * d + c ** 3 + b ** 3 * d
    h3 = 7 * d ** 2 - 6 * b * c * d + 2 * c ** 3 + 2 * b ** 3 * d - b ** 2 * c ** 2
    return Polynomial((d ** 2, h1, h2, h3, h2, h1, d ** 2))


def disc_g2_known_factor(d):
    """``-64 d^2 t^10 (t - 1)^6`` as a polynomial in ``t``."""
    d = _q(d)
    t = Polynomial.x()
    return -64 * d ** 2 * t ** 10 * (t - 1) ** 6


def disc_h(b, c, d):
    b, c, d = _q(b), _q(c), _q(d)
    return (
        -d ** 4 * (d - b * c) ** 2
        * (27 * d ** 2 - 18 * b * c * d + 4 * c ** 3 + 4 * b ** 3 * d - b ** 2 * c ** 2) ** 3
        * (c ** 3 - b ** 3 * d) ** 4
    )


def h_factored_at_bc(b, c):
    """``c (t+1)^2 (b^2 t^2 + c)(c t^2 + b^2)``."""
    b, c = _q(b), _q(c)
    t = Polynomial.x()
    return c * (t + 1) ** 2 * (b ** 2 * t ** 2 + c) * (c * t ** 2 + b ** 2)


def reduced_quartic(b, k):
    """``(k^4+1, -2bk^4+2bk^3, b^2k^4-4b^2k^3-b^2k^2, 2b^3k^3-2b^3k^2, b^4k^2(k^2+1))``, highest first."""
    b, k = _q(b), _q(k)
    return (
        k ** 4 + 1,
        -2 * b * k ** 4 + 2 * b * k ** 3,
        b ** 2 * k ** 4 - 4 * b ** 2 * k ** 3 - b ** 2 * k ** 2,
        2 * b ** 3 * k ** 3 - 2 * b ** 3 * k ** 2,
        b ** 4 * k ** 2 * (k ** 2 + 1),
    )


def c2_coefficients(b, r):
    """``(a4, a3, a2, a1, a0)``."""
    b, r = _q(b), _q(r)
    return (
        r ** 8 - 4 * r ** 6 + 22 * r ** 4 - 4 * r ** 2 + 1,
        -2 * b * (r ** 2 - 2 * r - 1) * (r - 1) ** 3 * (r + 1) ** 3,
        b ** 2 * (r ** 4 - 8 * r ** 3 - 6 * r ** 2 + 8 * r + 1) * (r - 1) ** 2 * (r + 1) ** 2,
        4 * b ** 3 * r * (r ** 2 - 2 * r - 1) * (r - 1) ** 2 * (r + 1) ** 2,
        b ** 4 * (r - 1) ** 2 * (r + 1) ** 2 * (r ** 2 + 1) ** 2,
    )


def c2_discriminant(b, r):
    b, r = _q(b), _q(r)
    return (
        16 * (17 * r ** 6 - 26 * r ** 5 + 27 * r ** 4 + 4 * r ** 3 - 5 * r ** 2 - 2 * r + 1)
        * (r ** 6 + 2 * r ** 5 - 5 * r ** 4 - 4 * r ** 3 + 27 * r ** 2 + 26 * r + 17)
        * (r ** 2 + 1) ** 4 * (r ** 2 + 2 * r - 1) ** 4 * (r ** 2 - 2 * r - 1) ** 4 * (r ** 2 - 1) ** 6 * b ** 12
    )


def _p12a(r):
    r = _q(r)
    return (
        13 * r ** 12 + 8 * r ** 11 - 70 * r ** 10 + 120 * r ** 9 + 371 * r ** 8 - 400 * r ** 7 + 140 * r ** 6
        + 400 * r ** 5 + 371 * r ** 4 - 120 * r ** 3 - 70 * r ** 2 - 8 * r + 13
    )


def _p12b(r):
    r = _q(r)
    return (
        19 * r ** 12 + 8 * r ** 11 - 130 * r ** 10 + 120 * r ** 9 + 461 * r ** 8 - 400 * r ** 7 + 452 * r ** 6
        + 400 * r ** 5 + 461 * r ** 4 - 120 * r ** 3 - 130 * r ** 2 - 8 * r + 19
    )


def e2_coefficients(b, r):
    b, r = _q(b), _q(r)
    b1 = -b ** 4 * _p12a(r) * (r ** 2 - 1) ** 2 / 3
    b2 = 2 * b ** 6 * (r ** 4 + 4 * r ** 3 + 18 * r ** 2 - 4 * r + 1) * _p12b(r) * (r ** 2 - 1) ** 4 / 27
    return b1, b2


def e2_scaled_coefficients(r):
    r = _q(r)
    c1 = -27 * _p12a(r) * (r ** 2 - 1) ** 2
    c2 = 54 * (r ** 4 + 4 * r ** 3 + 18 * r ** 2 - 4 * r + 1) * _p12b(r) * (r ** 2 - 1) ** 4
    return c1, c2


E2_AT_3 = (F(-14410137600), F(662504472576000))


def point_q(r):
    r = _q(r)
    return (
        3 * (r ** 2 - 1) * (r ** 6 + 4 * r ** 5 + 5 * r ** 4 - 8 * r ** 3 + 55 * r ** 2 + 4 * r - 13),
        108 * (r ** 2 + 2 * r - 1) * (r ** 2 - 2 * r - 1) * (r ** 3 - r + 2) * (r ** 2 - 1) ** 2,
    )


def double_q_denominator(r):
    """``2 (r^3 - r + 2)``; the coordinates of ``[2]Q`` have its square and cube as denominators."""
    r = _q(r)
    return 2 * (r ** 3 - r + 2)


def point_2q(r):
    r = _q(r)
    den = double_q_denominator(r)
    u_num = 3 * (
        3 * r ** 16 - 20 * r ** 14 + 16 * r ** 13 + 68 * r ** 12 - 64 * r ** 11 - 220 * r ** 10 + 400 * r ** 9
        + 970 * r ** 8 - 896 * r ** 7 + 1268 * r ** 6 + 688 * r ** 5 + 1428 * r ** 4 - 64 * r ** 3
        - 516 * r ** 2 - 80 * r + 91
    )
    v_num = (
        27 * (r ** 4 + 2 * r ** 2 + 5)
        * (r ** 12 + 8 * r ** 9 - 3 * r ** 8 + 96 * r ** 6 - 48 * r ** 5 + 67 * r ** 4 + 64 * r ** 3
           + 96 * r ** 2 - 24 * r - 1)
        * (r ** 2 + 2 * r - 1) ** 2 * (r ** 2 - 2 * r - 1) ** 2
    )
    return u_num / den ** 2, v_num / den ** 3


def double_q_remainder(r):
    """``R = 9(-724 r^5 + 1529 r^4 - 1876 r^3 - 1206 r^2 + 1896 r - 2287)``."""
    r = _q(r)
    return 9 * (-724 * r ** 5 + 1529 * r ** 4 - 1876 * r ** 3 - 1206 * r ** 2 + 1896 * r - 2287)


SCAN_LOW, SCAN_HIGH = -1631, 1626
