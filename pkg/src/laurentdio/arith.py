"""Exact helpers on integers and rationals."""

from fractions import Fraction
from math import isqrt


def integer_sqrt_exact(n):
    """Return ``s`` with ``s*s == n`` for a perfect square ``n >= 0``, else ``None``."""
    if n < 0:
        return None
    s = isqrt(n)
    return s if s * s == n else None


def rational_is_square(q):
    """Nonnegative rational square root of ``q``, or ``None`` when there is none.

    ``q`` is taken in lowest terms (``Fraction`` guarantees this), so it is a
    square exactly when numerator and denominator both are.
    """
    q = Fraction(q)
    if q < 0:
        return None
    n = integer_sqrt_exact(q.numerator)
    if n is None:
        return None
    d = integer_sqrt_exact(q.denominator)
    if d is None:
        return None
    return Fraction(n, d)


def parse_rational(text):
    """Parse ``"p"`` or ``"p/q"`` into a ``Fraction``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(q):
    """Canonical ``"p/q"`` text, with ``"/q"`` omitted when ``q == 1``."""
    return str(Fraction(q))
