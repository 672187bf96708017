from fractions import Fraction

from hypothesis import strategies as st

from laurentdio.poly import Polynomial

small_ints = st.integers(min_value=-30, max_value=30)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))
nonzero_rationals = rationals.filter(lambda q: q != 0)


def polynomials(max_degree=6, coeffs=rationals):
    return st.lists(coeffs, max_size=max_degree + 1).map(Polynomial)


def nonzero_polynomials(max_degree=6):
    return polynomials(max_degree).filter(bool)
