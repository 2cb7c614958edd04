from fractions import Fraction

import pytest
from hypothesis import given

from conftest import desc, lacunary_polynomials, polynomials, rationals, rooted_polynomials
from src.errors import PolynomialError
from src.poly_core import (
    ONE,
    X,
    ZERO,
    ZERO_POLY_MSG,
    Polynomial,
    SquarefreeFactor,
    cauchy_root_bound,
    derivative,
    evaluate,
    exact_quotient,
    make_polynomial,
    poly_add,
    poly_divmod,
    poly_gcd,
    poly_mul,
    poly_scale,
    poly_pow,
    poly_from_roots,
    poly_sub,
    reflect,
    require_nonconstant,
    require_nonzero,
    reverse,
    scale_variable,
    squarefree_decomposition,
    squarefree_part,
    strip_zero_roots,
    taylor_shift,
)


def test_high_zeros_are_stripped():
    p = Polynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert p.leading == 2


def test_zero_polynomial_has_no_degree():
    assert Polynomial((0, 0)).is_zero()
    assert ZERO.degree is None
    assert ZERO.leading == 0


def test_coefficients_become_fractions():
    p = make_polynomial(["1/2", 3])
    assert p.coeffs == (Fraction(1, 2), Fraction(3))
    assert p.coeff(5) == 0


def test_evaluate_horner():
    assert evaluate(desc(1, 0, -1), 3) == 8
    assert evaluate(desc(1, 0, -7, 6), "1/2") == Fraction(21, 8)


def test_derivative():
    assert derivative(desc(3, 0, 0, -1, 0)) == desc(12, 0, 0, -1)
    assert derivative(ONE).is_zero()


def test_taylor_shift_worked_example():
    # (X + 2)^2 - 1
    assert taylor_shift(desc(1, 0, -1), 2) == desc(1, 4, 3)


@given(polynomials(max_degree=6), rationals, rationals)
def test_taylor_shift_is_composition(p, t, x):
    assert evaluate(taylor_shift(p, t), x) == evaluate(p, x + t)


def test_reflect_reverse_scale():
    assert reflect(desc(1, 0, -7, 6)) == desc(-1, 0, 7, 6)
    assert reverse(desc(1, 2, 3)) == desc(3, 2, 1)
    assert scale_variable(desc(1, 0, -1), 2) == desc(4, 0, -1)


def test_strip_zero_roots():
    q, z0 = strip_zero_roots(desc(3, 0, 0, -1, 0))
    assert (q, z0) == (desc(3, 0, 0, -1), 1)


def test_ring_operations():
    assert poly_add(X, ONE) == desc(1, 1)
    assert poly_sub(X, X).is_zero()
    assert poly_mul(desc(1, -1), desc(1, 1)) == desc(1, 0, -1)
    assert poly_pow(desc(1, 1), 3) == desc(1, 3, 3, 1)
    assert poly_mul(ZERO, X).is_zero()


@given(polynomials(max_degree=6), polynomials(max_degree=3))
def test_divmod_reconstructs_dividend(p, q):
    quot, rem = poly_divmod(p, q)
    assert poly_add(poly_mul(quot, q), rem) == p
    assert rem.is_zero() or rem.degree < q.degree


def test_division_by_zero_polynomial():
    with pytest.raises(PolynomialError):
        poly_divmod(X, ZERO)


def test_exact_quotient_rejects_remainder():
    assert exact_quotient(desc(1, 0, -1), desc(1, -1)) == desc(1, 1)
    with pytest.raises(PolynomialError, match="not exact"):
        exact_quotient(desc(1, 0, 1), desc(1, -1))


def test_gcd_is_monic():
    # (X - 1)^2 (X + 2)
    p = desc(1, 0, -3, 2)
    assert poly_gcd(p, derivative(p)) == desc(1, -1)
    assert poly_gcd(desc(2, 4), ZERO) == desc(1, 2)
    with pytest.raises(PolynomialError):
        poly_gcd(ZERO, ZERO)


def test_squarefree_part_and_decomposition():
    p = desc(1, 0, -3, 2)
    assert squarefree_part(p) == desc(1, 1, -2)
    assert squarefree_decomposition(p) == [
        SquarefreeFactor(desc(1, 2), 1),
        SquarefreeFactor(desc(1, -1), 2),
    ]


def test_squarefree_decomposition_keeps_leading_constant_out():
    factors = squarefree_decomposition(poly_from_roots([1, 1, 1], leading=-5))
    assert factors == [SquarefreeFactor(desc(1, -1), 3)]


def test_decomposition_rejects_constants():
    with pytest.raises(PolynomialError):
        squarefree_decomposition(desc(7))
    with pytest.raises(PolynomialError):
        squarefree_decomposition(ZERO)


def test_require_helpers():
    with pytest.raises(PolynomialError, match=ZERO_POLY_MSG):
        require_nonzero(ZERO)
    with pytest.raises(PolynomialError, match="constant"):
        require_nonconstant(desc(5))
    require_nonconstant(X)


def test_cauchy_bound_and_poly_from_roots():
    cubic = poly_from_roots([1, 2, -3])
    assert cubic == desc(1, 0, -7, 6)
    assert cauchy_root_bound(cubic) == 8


@given(polynomials(max_degree=4), polynomials(max_degree=4))
def test_multiplication_adds_degrees(p, q):
    assert poly_mul(p, q).degree == p.degree + q.degree


@given(polynomials(max_degree=5))
def test_cauchy_bound_is_strict(p):
    bound = cauchy_root_bound(p)
    assert evaluate(p, bound) != 0
    assert evaluate(p, -bound) != 0


def test_worked_examples():
    assert evaluate(desc(1, 0, -1), 1) == 0
    assert make_polynomial([0, 0, 0]).is_zero()
    assert strip_zero_roots(desc(1, 0, 0, 0)) == (ONE, 3)
    assert strip_zero_roots(desc(1, 0, -1)) == (desc(1, 0, -1), 0)
    assert taylor_shift(desc(1, 0, -7, 6), 2) == desc(1, 6, 5, 0)
    assert poly_gcd(desc(1, 0, -7, 6), desc(3, 0, -7)) == ONE
    assert cauchy_root_bound(desc(1, 0, -1)) == 2
    assert cauchy_root_bound(desc(3, 0, 0, -1)) == Fraction(4, 3)
    assert squarefree_decomposition(desc(1, 0, 0, 0)) == [SquarefreeFactor(X, 3)]


@given(polynomials(max_degree=4), polynomials(max_degree=4), rationals)
def test_multiplication_multiplies_values(p, q, x):
    assert evaluate(poly_mul(p, q), x) == evaluate(p, x) * evaluate(q, x)


@given(polynomials(max_degree=6), rationals, rationals)
def test_taylor_shifts_compose(p, s, t):
    assert taylor_shift(taylor_shift(p, s), t) == taylor_shift(p, s + t)


@given(lacunary_polynomials())
def test_strip_zero_roots_factors_out_a_power_of_x(p):
    q, z0 = strip_zero_roots(p)
    assert q.coeffs[0] != 0
    assert poly_mul(q, poly_pow(X, z0)) == p


@given(rooted_polynomials())
def test_squarefree_factors_rebuild_the_polynomial(case):
    p, _, _ = case
    rebuilt = ONE
    for sf in squarefree_decomposition(p):
        assert poly_gcd(sf.factor, derivative(sf.factor)) == ONE
        rebuilt = poly_mul(rebuilt, poly_pow(sf.factor, sf.multiplicity))
    assert poly_scale(rebuilt, p.leading) == p


@given(rooted_polynomials())
def test_cauchy_bound_contains_every_root(case):
    p, roots, _ = case
    bound = cauchy_root_bound(p)
    assert all(abs(r) < bound for r in roots)
