from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from src.poly_core import Polynomial, poly_from_roots, poly_mul

settings.register_profile("signrules", deadline=None, max_examples=60)
settings.load_profile("signrules")


def desc(*coeffs) -> Polynomial:
    """Polynomial from coefficients written highest power first."""
    return Polynomial(tuple(reversed(coeffs)))


coefficients = st.integers(min_value=-20, max_value=20)
nonzero_coefficients = coefficients.filter(lambda c: c != 0)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)
positive_rationals = st.fractions(min_value=Fraction(1, 6), max_value=10, max_denominator=6)


@st.composite
def polynomials(draw, min_degree: int = 1, max_degree: int = 8) -> Polynomial:
    lower = draw(st.lists(coefficients, min_size=min_degree, max_size=max_degree))
    return Polynomial(tuple(lower) + (draw(nonzero_coefficients),))


@st.composite
def lacunary_polynomials(draw, max_zeros: int = 6) -> Polynomial:
    inner = draw(st.lists(st.sampled_from([0, 0, 0, 1, -1, 5, -7]), min_size=1, max_size=max_zeros))
    trailing = draw(st.integers(min_value=0, max_value=2))
    coeffs = [0] * trailing + [draw(nonzero_coefficients)] + inner + [draw(nonzero_coefficients)]
    return Polynomial(tuple(coeffs))


@st.composite
def rooted_polynomials(draw, max_roots: int = 4):
    """(P, {root: multiplicity}, has_quadratic) with P built from the roots."""
    roots = draw(st.dictionaries(rationals, st.integers(min_value=1, max_value=3), max_size=max_roots))
    quadratic = draw(st.booleans()) or not roots
    p = poly_from_roots([r for r, m in roots.items() for _ in range(m)])
    if quadratic:
        p = poly_mul(p, Polynomial((draw(positive_rationals), 0, 1)))
    return p, roots, quadratic


@pytest.fixture
def x2m1() -> Polynomial:
    return desc(1, 0, -1)


@pytest.fixture
def quartic() -> Polynomial:
    # 3X^4 - X
    return desc(3, 0, 0, -1, 0)


@pytest.fixture
def cubic() -> Polynomial:
    # (X - 1)(X - 2)(X + 3)
    return desc(1, 0, -7, 6)
