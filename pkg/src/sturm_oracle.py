"""Exact real-root counts from Sturm chains.

This is the reference every sign-rule bound is checked against.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from src.errors import PolynomialError
from src.poly_core import (
    Polynomial,
    RationalLike,
    cauchy_root_bound,
    derivative,
    evaluate,
    poly_divmod,
    poly_scale,
    reflect,
    require_nonconstant,
    squarefree_decomposition,
    squarefree_part,
    strip_zero_roots,
)
from src.sign_rules import count_value_alternations

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SturmChain:
    polys: Tuple[Polynomial, ...]

    @property
    def squarefree(self) -> Polynomial:
        return self.polys[0]


@dataclass(frozen=True)
class ExactRootCounts:
    positive: int
    negative: int
    zero: int

    def imaginary(self, degree: int) -> int:
        return degree - self.positive - self.negative - self.zero


def _normalized(p: Polynomial) -> Polynomial:
    # positive scaling keeps every sign evaluation intact
    return poly_scale(p, 1 / abs(p.leading))


def sturm_chain(p: Polynomial) -> SturmChain:
    require_nonconstant(p)
    s = squarefree_part(p)
    chain = [s, _normalized(derivative(s))]
    while True:
        _, rem = poly_divmod(chain[-2], chain[-1])
        if rem.is_zero():
            break
        chain.append(_normalized(poly_scale(rem, -1)))
    logger.debug("sturm chain of degree %s has %d entries", s.degree, len(chain))
    return SturmChain(tuple(chain))


def chain_variations(chain: SturmChain, x: RationalLike) -> int:
    return count_value_alternations([evaluate(q, x) for q in chain.polys])


def count_distinct_roots(chain: SturmChain, a: RationalLike, b: RationalLike) -> int:
    """Distinct real roots of the chain's squarefree polynomial in (a, b]."""
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise PolynomialError(f"interval is empty: a = {a} > b = {b}")
    return chain_variations(chain, a) - chain_variations(chain, b)


def count_roots_with_multiplicity(p: Polynomial, a: RationalLike, b: RationalLike) -> int:
    require_nonconstant(p)
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise PolynomialError(f"interval is empty: a = {a} > b = {b}")
    total = 0
    for sf in squarefree_decomposition(p):
        total += sf.multiplicity * count_distinct_roots(sturm_chain(sf.factor), a, b)
    return total


def exact_root_counts(p: Polynomial) -> ExactRootCounts:
    """z+, z- and z0 of P, all counted with multiplicity."""
    require_nonconstant(p)
    q, z0 = strip_zero_roots(p)
    if q.degree == 0:
        return ExactRootCounts(positive=0, negative=0, zero=z0)
    bound = cauchy_root_bound(q)
    positive = count_roots_with_multiplicity(q, 0, bound)
    negative = count_roots_with_multiplicity(reflect(q), 0, bound)
    return ExactRootCounts(positive=positive, negative=negative, zero=z0)


def imaginary_root_count(p: Polynomial) -> int:
    return exact_root_counts(p).imaginary(p.degree)
