"""Real-root isolation by bisection on sign-rule bounds."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.budan import budan_bound
from src.errors import IsolationDepthError, PolynomialError
from src.poly_core import (
    Polynomial,
    RationalLike,
    SquarefreeFactor,
    cauchy_root_bound,
    evaluate,
    exact_quotient,
    require_nonconstant,
    reverse,
    scale_variable,
    squarefree_decomposition,
    squarefree_part,
    taylor_shift,
)
from src.sign_rules import count_alternations

logger = logging.getLogger(__name__)

MAX_BISECTION_DEPTH = 512


@dataclass(frozen=True)
class IsolatedRoot:
    """One distinct real root: inside (low, high], or exactly low == high."""
    low: Fraction
    high: Fraction
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return self.low == self.high

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    def contains(self, x: RationalLike) -> bool:
        x = Fraction(x)
        if self.is_exact:
            return x == self.low
        return self.low < x <= self.high


def _linear(root: Fraction) -> Polynomial:
    return Polynomial((-root, 1))


def descartes_interval_count(p: Polynomial, a: RationalLike, b: RationalLike) -> int:
    """Alternations of (X + 1)^n P((a X + b) / (X + 1)).

    Its positive roots are the images of the roots of P in (a, b), so the
    count bounds them with matching parity whenever P(b) != 0.
    """
    require_nonconstant(p)
    a, b = Fraction(a), Fraction(b)
    if a >= b:
        raise PolynomialError(f"interval is empty: a = {a} >= b = {b}")
    unit = scale_variable(taylor_shift(p, a), b - a)
    return count_alternations(taylor_shift(reverse(unit), 1))


def _decision_count(s: Polynomial, a: Fraction, b: Fraction) -> int:
    bound = budan_bound(s, a, b).bound
    if bound <= 1:
        return bound
    # Budan stalls on non-real pairs whose real part sits on a cut point
    return min(bound, descartes_interval_count(s, a, b))


def _deflate_endpoints(f: Polynomial, low: Fraction, high: Fraction) -> Polynomial:
    for e in (low, high):
        if f.degree and evaluate(f, e) == 0:
            f = exact_quotient(f, _linear(e))
    return f


def _multiplicity(factors: List[SquarefreeFactor], low: Fraction, high: Fraction) -> int:
    for sf in factors:
        if low == high:
            if evaluate(sf.factor, low) == 0:
                return sf.multiplicity
            continue
        f = _deflate_endpoints(sf.factor, low, high)
        if f.degree and evaluate(f, low) * evaluate(f, high) < 0:
            return sf.multiplicity
    raise PolynomialError(f"no squarefree factor has a root in ({low}, {high}]")


def isolate_real_roots(p: Polynomial, max_depth: Optional[int] = None) -> List[IsolatedRoot]:
    """Disjoint intervals, one per distinct real root, sorted left to right."""
    require_nonconstant(p)
    max_depth = MAX_BISECTION_DEPTH if max_depth is None else max_depth
    factors = squarefree_decomposition(p)
    s = squarefree_part(p)
    bound = cauchy_root_bound(s)

    found: List[Tuple[Fraction, Fraction]] = []
    stack: List[Tuple[Fraction, Fraction, Polynomial, int]] = [(-bound, bound, s, 0)]
    while stack:
        a, b, q, depth = stack.pop()
        if q.degree == 0:
            continue
        if depth > max_depth:
            raise IsolationDepthError(f"bisection exceeded depth {max_depth} on ({a}, {b}]")
        count = _decision_count(q, a, b)
        if count == 0:
            continue
        # a right endpoint that is an emitted exact root would overlap that point
        if count == 1 and evaluate(s, b) != 0:
            found.append((a, b))
            continue
        m = (a + b) / 2
        if evaluate(q, m) == 0:
            logger.debug("exact root %s hit at depth %d", m, depth)
            found.append((m, m))
            q = exact_quotient(q, _linear(m))
        stack.append((m, b, q, depth + 1))
        stack.append((a, m, q, depth + 1))

    roots = [IsolatedRoot(lo, hi, _multiplicity(factors, lo, hi)) for lo, hi in found]
    roots.sort(key=lambda r: (r.low, r.high))
    logger.debug("isolated %d real root(s) of a degree %s polynomial", len(roots), p.degree)
    return roots


def refine(root: IsolatedRoot, p: Polynomial, width: RationalLike) -> IsolatedRoot:
    """Bisect an isolating interval until it is at most `width` wide."""
    width = Fraction(width)
    if width <= 0:
        raise PolynomialError("refinement width must be positive")
    if root.is_exact or root.width <= width:
        return root
    low, high = root.low, root.high
    f = _deflate_endpoints(squarefree_part(p), low, high)
    f_low = evaluate(f, low)
    if f_low * evaluate(f, high) >= 0:
        raise PolynomialError(f"({low}, {high}] does not isolate a root of the polynomial")
    while high - low > width:
        m = (low + high) / 2
        f_mid = evaluate(f, m)
        if f_mid == 0:
            return IsolatedRoot(m, m, root.multiplicity)
        if (f_low < 0) == (f_mid < 0):
            low, f_low = m, f_mid
        else:
            high = m
    return IsolatedRoot(low, high, root.multiplicity)
