"""Independent cross-checks in sympy of the two places where the displayed formulas disagree with computation."""

import pytest

sp = pytest.importorskip("sympy")

from laurentdio import closed_forms  # noqa: E402
from laurentdio.ratfunc import indeterminate  # noqa: E402

T = indeterminate()
Ts, ts = sp.symbols("T t")


def _sym(v, var="T"):
    text = v.to_text(var) if hasattr(v, "to_text") else str(v)
    return sp.sympify(text.replace("^", "**"), locals={var: sp.Symbol(var)})


@pytest.mark.parametrize("b, c", [(1, 1), (2, 3)])
def test_displayed_image_point_model(b, c):
    a4, a3, a2, a1, a0 = (_sym(a) for a in closed_forms.g1_coefficients(b, c, T))
    # classical invariants of a binary quartic
    I = 12 * a4 * a0 - 3 * a3 * a1 + a2 ** 2
    J = 72 * a4 * a2 * a0 + 9 * a3 * a2 * a1 - 27 * a4 * a1 ** 2 - 27 * a0 * a3 ** 2 - 2 * a2 ** 3
    B1, B2 = (_sym(v) for v in closed_forms.e1_transcribed(b, c, T))
    X, Y = (_sym(v) for v in closed_forms.image_point(b, c, T))
    assert sp.simplify(B1 - 27 * I) == 0 and sp.simplify(B2 + 27 * J) == 0
    assert sp.simplify(Y ** 2 - (X ** 3 - B1 * X + B2)) == 0
    assert sp.simplify(Y ** 2 - (X ** 3 + B1 * X + B2)) != 0


def test_g2_discriminant_has_h_squared():
    b, c, d = 1, 2, 5
    x = sp.Symbol("x")
    f = lambda u: u ** 2 + b * u + c + sp.Rational(d) / u  # noqa: E731
    g = sp.expand(sp.cancel(ts ** 2 * x ** 2 * (f(x) ** 2 + f(ts * x) ** 2)))
    disc = sp.Poly(sp.discriminant(sp.Poly(g, x), x), ts)
    h = sp.Poly(_sym(closed_forms.h_polynomial(b, c, d), "t"), ts)
    known = sp.Poly(-64 * d ** 2 * ts ** 10 * (ts - 1) ** 6, ts)
    q, r = sp.div(disc, known * h)
    assert r.is_zero and q.degree() == 18
    q2, r2 = sp.div(q, h)
    assert r2.is_zero and q2.degree() == 12
