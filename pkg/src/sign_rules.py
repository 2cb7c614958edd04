"""Alternations and permanences of signs under the minimization convention.

When counting alternations a zero coefficient takes the sign of its
higher-index neighbour; when counting permanences it takes the opposite sign.
Both counts run over a_n .. a_{z0}: trailing zero coefficients never count.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.errors import PolynomialError
from src.poly_core import Polynomial, require_nonconstant, require_nonzero, strip_zero_roots

logger = logging.getLogger(__name__)


class Sign(Enum):
    PLUS = "+"
    MINUS = "-"
    ZERO = "0"

    def opposite(self) -> "Sign":
        if self is Sign.PLUS:
            return Sign.MINUS
        if self is Sign.MINUS:
            return Sign.PLUS
        return Sign.ZERO

    def __str__(self) -> str:
        return self.value


def sign_of(value: Fraction) -> Sign:
    if value > 0:
        return Sign.PLUS
    if value < 0:
        return Sign.MINUS
    return Sign.ZERO


@dataclass(frozen=True)
class SignCounts:
    alternations: int
    permanences: int
    zero_roots: int
    degree: int


@dataclass(frozen=True)
class ZeroBlock:
    left_sign: Sign
    right_sign: Sign
    zero_run_length: int
    pair_count: int
    alternation_contrib: int
    permanence_contrib: int
    loss: int


@dataclass(frozen=True)
class RootBoundReport:
    counts: SignCounts
    positive_upper: int
    negative_upper: int
    positive_parity: int
    negative_parity: int
    imaginary_lower: int


def _window(p: Polynomial) -> List[Fraction]:
    # a_n down to a_{z0}
    require_nonzero(p)
    _, z0 = strip_zero_roots(p)
    return list(reversed(p.coeffs[z0:]))


def alternation_signs(p: Polynomial) -> List[Sign]:
    signs: List[Sign] = []
    for c in _window(p):
        s = sign_of(c)
        signs.append(signs[-1] if s is Sign.ZERO else s)
    return signs


def permanence_signs(p: Polynomial) -> List[Sign]:
    signs: List[Sign] = []
    for c in _window(p):
        s = sign_of(c)
        signs.append(signs[-1].opposite() if s is Sign.ZERO else s)
    return signs


def _pairs(signs: Sequence[Sign]) -> Tuple[int, int]:
    alternations = permanences = 0
    for left, right in zip(signs, signs[1:]):
        if left is right:
            permanences += 1
        else:
            alternations += 1
    return alternations, permanences


def count_alternations(p: Polynomial) -> int:
    return _pairs(alternation_signs(p))[0]


def count_permanences(p: Polynomial) -> int:
    return _pairs(permanence_signs(p))[1]


def count_value_alternations(values: Sequence[Fraction]) -> int:
    """Alternations of a value sequence with zeros ignored."""
    signs = [sign_of(Fraction(v)) for v in values]
    return _pairs([s for s in signs if s is not Sign.ZERO])[0]


def counts_under_assignment(p: Polynomial, assignment: Sequence[Sign]) -> Tuple[int, int]:
    """Count both kinds of pairs after giving each internal zero an explicit sign.

    The assignment lists signs for the zero coefficients of the counting
    window, highest index first.
    """
    window = _window(p)
    zeros = sum(1 for c in window if c == 0)
    if len(assignment) != zeros:
        raise PolynomialError(
            f"assignment has {len(assignment)} sign(s) but the polynomial has {zeros} internal zero(s)"
        )
    if any(s is Sign.ZERO for s in assignment):
        raise PolynomialError("assigned signs must be + or -")
    it = iter(assignment)
    signs = [next(it) if c == 0 else sign_of(c) for c in window]
    return _pairs(signs)


def sign_counts(p: Polynomial) -> SignCounts:
    require_nonzero(p)
    _, z0 = strip_zero_roots(p)
    return SignCounts(
        alternations=count_alternations(p),
        permanences=count_permanences(p),
        zero_roots=z0,
        degree=p.degree,
    )


def descartes_report(p: Polynomial) -> RootBoundReport:
    require_nonconstant(p)
    counts = sign_counts(p)
    v, c = counts.alternations, counts.permanences
    return RootBoundReport(
        counts=counts,
        positive_upper=v,
        negative_upper=c,
        positive_parity=v % 2,
        negative_parity=c % 2,
        imaginary_lower=counts.degree - counts.zero_roots - v - c,
    )


def _block_contributions(left: Sign, right: Sign, run: int) -> Tuple[int, int]:
    if run % 2 == 0:
        return (0, 1) if left is right else (1, 0)
    return (0, 0) if left is right else (1, 1)


def de_gua_blocks(p: Polynomial) -> List[ZeroBlock]:
    """One block per maximal run of internal zero coefficients, highest first."""
    window = _window(p)
    blocks: List[ZeroBlock] = []
    i = 0
    while i < len(window):
        if window[i] != 0:
            i += 1
            continue
        j = i
        while window[j] == 0:
            j += 1
        run = j - i
        left, right = sign_of(window[i - 1]), sign_of(window[j])
        alt, perm = _block_contributions(left, right, run)
        blocks.append(ZeroBlock(
            left_sign=left,
            right_sign=right,
            zero_run_length=run,
            pair_count=run + 1,
            alternation_contrib=alt,
            permanence_contrib=perm,
            loss=run + 1 - alt - perm,
        ))
        i = j
    logger.debug("%d zero block(s), total loss %d", len(blocks), sum(b.loss for b in blocks))
    return blocks


def endpoint_parity(p: Polynomial) -> int:
    """v(P) mod 2, read off the extremities of the counting window."""
    window = _window(p)
    return 0 if sign_of(window[0]) is sign_of(window[-1]) else 1


def newton_gap_violations(p: Polynomial) -> List[int]:
    """Indices i with a_i^2 < a_{i-1} a_{i+1}.

    Coefficients of a polynomial whose roots are all real never violate the
    inequality, so any returned index certifies a pair of non-real roots.
    """
    require_nonzero(p)
    cs = p.coeffs
    return [i for i in range(1, len(cs) - 1) if cs[i] * cs[i] < cs[i - 1] * cs[i + 1]]
