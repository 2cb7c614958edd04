"""Budan's rule: sign variations of the derivative sequence at a point."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.errors import PolynomialError
from src.poly_core import (
    Polynomial,
    RationalLike,
    derivative,
    evaluate,
    require_nonconstant,
    taylor_shift,
)
from src.sign_rules import count_alternations, count_value_alternations, sign_of

logger = logging.getLogger(__name__)

NOT_CONSTANT_SIGN_MSG = "n-th derivative not of constant sign"
INCONSISTENT_SEQUENCES_MSG = "inconsistent input: sequences violate Theorem genBudan preconditions"


@dataclass(frozen=True)
class DerivativeSignSequence:
    # f^(n)(t), f^(n-1)(t), ..., f'(t), f(t)
    values: Tuple[Fraction, ...]
    point: Fraction

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        object.__setattr__(self, "point", Fraction(self.point))
        if not self.values or self.values[0] == 0:
            raise PolynomialError(NOT_CONSTANT_SIGN_MSG)

    @property
    def order(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class BudanReport:
    v_at_a: int
    v_at_b: int
    bound: int
    parity: int
    interval: Tuple[Fraction, Fraction]


def derivative_sequence(p: Polynomial, t: RationalLike) -> DerivativeSignSequence:
    require_nonconstant(p)
    t = Fraction(t)
    values: List[Fraction] = []
    q = p
    while not q.is_zero():
        values.append(evaluate(q, t))
        q = derivative(q)
    return DerivativeSignSequence(values=tuple(reversed(values)), point=t)


def variation_at(p: Polynomial, t: RationalLike, via_derivatives: bool = False) -> int:
    """v(P, t): alternations of P^(n)(t), ..., P(t).

    The default path counts the coefficients of P(X + t), which are the same
    values divided by positive factorials. via_derivatives evaluates every
    derivative instead and is kept for cross-checking.
    """
    require_nonconstant(p)
    if via_derivatives:
        return count_value_alternations(derivative_sequence(p, t).values)
    return count_alternations(taylor_shift(p, t))


def budan_bound(p: Polynomial, a: RationalLike, b: RationalLike) -> BudanReport:
    """Upper bound, with matching parity, on the roots of P in (a, b]."""
    require_nonconstant(p)
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise PolynomialError(f"interval is empty: a = {a} > b = {b}")
    if evaluate(p, a) == 0:
        raise PolynomialError("left endpoint is a root")
    v_a = variation_at(p, a)
    v_b = variation_at(p, b)
    bound = v_a - v_b
    return BudanReport(v_at_a=v_a, v_at_b=v_b, bound=bound, parity=bound % 2, interval=(a, b))


def generalized_budan_bound(seq_a: DerivativeSignSequence, seq_b: DerivativeSignSequence) -> int:
    """v(f, a, n) - v(f, b, n) for precomputed derivative values of any f.

    Valid when f^(n) keeps one sign and does not vanish on [a, b] and f(a) != 0;
    the result then bounds the zeros of f in [a, b] counted with multiplicity.
    """
    if len(seq_a.values) != len(seq_b.values):
        raise PolynomialError("derivative sequences have different lengths")
    if sign_of(seq_a.values[0]) is not sign_of(seq_b.values[0]):
        raise PolynomialError(NOT_CONSTANT_SIGN_MSG)
    if seq_a.values[-1] == 0:
        raise PolynomialError("left endpoint is a root")
    if seq_a.point >= seq_b.point:
        raise PolynomialError(f"interval is empty: a = {seq_a.point} >= b = {seq_b.point}")
    diff = count_value_alternations(seq_a.values) - count_value_alternations(seq_b.values)
    if diff < 0:
        raise PolynomialError(INCONSISTENT_SEQUENCES_MSG)
    return diff


def variation_profile(p: Polynomial, points: Sequence[RationalLike]) -> List[Tuple[Fraction, int]]:
    require_nonconstant(p)
    pts = [Fraction(t) for t in points]
    if any(x > y for x, y in zip(pts, pts[1:])):
        raise PolynomialError("points must be sorted in ascending order")
    profile = [(t, variation_at(p, t)) for t in pts]
    logger.debug("variation profile over %d point(s): %s", len(pts), [v for _, v in profile])
    return profile
