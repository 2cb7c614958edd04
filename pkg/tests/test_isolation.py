from fractions import Fraction

import pytest
from hypothesis import given

from conftest import desc, rooted_polynomials
from src.errors import IsolationDepthError, PolynomialError
from src.isolation import IsolatedRoot, descartes_interval_count, isolate_real_roots, refine
from src.poly_core import evaluate
from src.sturm_oracle import count_distinct_roots, sturm_chain


def test_isolates_plus_minus_one(x2m1):
    roots = isolate_real_roots(x2m1)
    assert len(roots) == 2
    assert roots[0].contains(-1) and roots[1].contains(1)
    assert all(r.multiplicity == 1 for r in roots)


def test_double_root_multiplicity():
    # (X - 1)^2 (X + 2)
    roots = isolate_real_roots(desc(1, 0, -3, 2))
    assert len(roots) == 2
    assert roots[0].contains(-2) and roots[0].multiplicity == 1
    assert roots[1].contains(1) and roots[1].multiplicity == 2


def test_no_real_roots():
    assert isolate_real_roots(desc(1, 0, 1)) == []


def test_midpoint_roots_come_back_as_points(cubic):
    roots = isolate_real_roots(cubic)
    assert len(roots) == 3
    assert roots[0].contains(-3) and not roots[0].is_exact
    assert [(r.low, r.is_exact) for r in roots[1:]] == [(1, True), (2, True)]


def test_roots_are_sorted_and_disjoint(cubic):
    roots = isolate_real_roots(cubic)
    for left, right in zip(roots, roots[1:]):
        assert left.high <= right.low


def test_isolation_rejects_constants():
    with pytest.raises(PolynomialError):
        isolate_real_roots(desc(2))


def test_depth_cap(x2m1):
    with pytest.raises(IsolationDepthError):
        isolate_real_roots(x2m1, max_depth=0)


def test_isolated_root_helpers():
    r = IsolatedRoot(Fraction(0), Fraction(2), 1)
    assert r.width == 2 and not r.is_exact
    assert r.contains(2) and not r.contains(0)
    p = IsolatedRoot(Fraction(1), Fraction(1), 3)
    assert p.is_exact and p.contains(1) and not p.contains(2)


def test_refine_to_width(x2m1):
    root = isolate_real_roots(x2m1)[1]
    refined = refine(root, x2m1, Fraction(1, 1024))
    assert refined.contains(1)
    assert refined.width <= Fraction(1, 1024)
    assert refined.multiplicity == 1


def test_refine_around_minus_three(cubic):
    root = isolate_real_roots(cubic)[0]
    refined = refine(root, cubic, Fraction(1, 100))
    assert refined.low >= Fraction(-301, 100)
    assert refined.high <= Fraction(-299, 100)
    assert refined.contains(-3)


def test_refine_leaves_points_alone(cubic):
    point = IsolatedRoot(Fraction(1), Fraction(1), 1)
    assert refine(point, cubic, Fraction(1, 10)) is point


def test_refine_width_must_be_positive(x2m1):
    root = isolate_real_roots(x2m1)[0]
    with pytest.raises(PolynomialError, match="positive"):
        refine(root, x2m1, 0)


def test_refine_rejects_non_isolating_interval(x2m1):
    with pytest.raises(PolynomialError):
        refine(IsolatedRoot(Fraction(2), Fraction(3), 1), x2m1, Fraction(1, 10))


def test_descartes_interval_count():
    assert descartes_interval_count(desc(1, 0, -1), 0, 2) == 1
    assert descartes_interval_count(desc(1, 0, 1), -1, 1) == 0
    with pytest.raises(PolynomialError):
        descartes_interval_count(desc(1, 0, 1), 1, 1)


@given(rooted_polynomials(max_roots=5))
def test_isolation_finds_the_constructed_roots(case):
    p, constructed, _ = case
    roots = isolate_real_roots(p)
    assert len(roots) == len(constructed)
    chain = sturm_chain(p)
    for left, right in zip(roots, roots[1:]):
        assert left.high < right.low or (left.high == right.low and not right.is_exact)
    for root in roots:
        [inside] = [r for r in constructed if root.contains(r)]
        assert root.multiplicity == constructed[inside]
        if root.is_exact:
            assert evaluate(p, root.low) == 0
        else:
            assert count_distinct_roots(chain, root.low, root.high) == 1
