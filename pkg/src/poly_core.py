import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.errors import PolynomialError

logger = logging.getLogger(__name__)

RationalLike = Union[Fraction, int, str]

ZERO_POLY_MSG = "zero polynomial has no defined root structure"


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial over the rationals.

    coeffs[i] is the coefficient of X^i (ascending powers). High-order zeros
    are stripped on construction, so the zero polynomial is the empty tuple.
    """
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> Optional[int]:
        # None is the "no degree" marker of the zero polynomial
        if not self.coeffs:
            return None
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)


@dataclass(frozen=True)
class SquarefreeFactor:
    factor: Polynomial
    multiplicity: int


ZERO = Polynomial(())
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def make_polynomial(coeffs: Iterable[RationalLike]) -> Polynomial:
    """Build a polynomial from ascending coefficients."""
    return Polynomial(tuple(coeffs))


def require_nonzero(p: Polynomial) -> None:
    if p.is_zero():
        raise PolynomialError(ZERO_POLY_MSG)


def require_nonconstant(p: Polynomial) -> None:
    require_nonzero(p)
    if p.degree == 0:
        raise PolynomialError("constant polynomial has no roots to bound")


def evaluate(p: Polynomial, t: RationalLike) -> Fraction:
    t = Fraction(t)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def taylor_shift(p: Polynomial, t: RationalLike) -> Polynomial:
    """Return Q with Q(X) = P(X + t).

    Iterated synthetic division; coefficient i of the result is P^(i)(t)/i!.
    """
    t = Fraction(t)
    cs = list(p.coeffs)
    if t == 0 or len(cs) <= 1:
        return Polynomial(tuple(cs))
    n = len(cs) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            cs[j] += t * cs[j + 1]
    return Polynomial(tuple(cs))


def reflect(p: Polynomial) -> Polynomial:
    """P(-X)."""
    return Polynomial(tuple(-c if i % 2 else c for i, c in enumerate(p.coeffs)))


def reverse(p: Polynomial) -> Polynomial:
    """X^n P(1/X) for n = deg P."""
    return Polynomial(tuple(reversed(p.coeffs)))


def scale_variable(p: Polynomial, s: RationalLike) -> Polynomial:
    """P(s X)."""
    s = Fraction(s)
    out = []
    power = Fraction(1)
    for c in p.coeffs:
        out.append(c * power)
        power *= s
    return Polynomial(tuple(out))


def strip_zero_roots(p: Polynomial) -> Tuple[Polynomial, int]:
    """Split P = X^z0 * Q with Q(0) != 0."""
    require_nonzero(p)
    z0 = 0
    while p.coeffs[z0] == 0:
        z0 += 1
    return Polynomial(p.coeffs[z0:]), z0


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    return Polynomial(tuple(p.coeff(i) + q.coeff(i) for i in range(n)))


def poly_scale(p: Polynomial, r: RationalLike) -> Polynomial:
    r = Fraction(r)
    return Polynomial(tuple(c * r for c in p.coeffs))


def poly_sub(p: Polynomial, q: Polynomial) -> Polynomial:
    return poly_add(p, poly_scale(q, -1))


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return ZERO
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Polynomial(tuple(out))


def poly_pow(p: Polynomial, k: int) -> Polynomial:
    result = ONE
    for _ in range(k):
        result = poly_mul(result, p)
    return result


def poly_divmod(p: Polynomial, q: Polynomial) -> Tuple[Polynomial, Polynomial]:
    if q.is_zero():
        raise PolynomialError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.leading
    if len(rem) - 1 < dq:
        return ZERO, p
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        factor = rem[k + dq] / lead
        quot[k] = factor
        if factor == 0:
            continue
        for j, b in enumerate(q.coeffs):
            rem[k + j] -= factor * b
    return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dq]))


def poly_monic(p: Polynomial) -> Polynomial:
    require_nonzero(p)
    return poly_scale(p, 1 / p.leading)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor (Euclid over the rationals)."""
    if p.is_zero() and q.is_zero():
        raise PolynomialError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        # keep the remainders monic so coefficients stay small
        a, b = b, (r if r.is_zero() else poly_monic(r))
    return poly_monic(a)


def exact_quotient(p: Polynomial, q: Polynomial) -> Polynomial:
    quot, rem = poly_divmod(p, q)
    if not rem.is_zero():
        raise PolynomialError("division is not exact")
    return quot


def squarefree_part(p: Polynomial) -> Polynomial:
    """Monic polynomial with the same roots as P, each simple."""
    require_nonconstant(p)
    return poly_monic(exact_quotient(p, poly_gcd(p, derivative(p))))


def squarefree_decomposition(p: Polynomial) -> List[SquarefreeFactor]:
    """Yun's algorithm: P = c * prod(f_i ** i) with f_i squarefree and coprime."""
    if p.is_zero() or p.degree == 0:
        raise PolynomialError("squarefree decomposition needs a polynomial of degree >= 1")
    dp = derivative(p)
    g = poly_gcd(p, dp)
    b = exact_quotient(p, g)
    c = exact_quotient(dp, g)
    d = poly_sub(c, derivative(b))
    factors: List[SquarefreeFactor] = []
    i = 1
    while b.degree and b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree and a.degree > 0:
            factors.append(SquarefreeFactor(a, i))
        b = exact_quotient(b, a)
        c = exact_quotient(d, a)
        d = poly_sub(c, derivative(b))
        i += 1
    logger.debug("squarefree decomposition of degree %s: %d factor(s)", p.degree, len(factors))
    return factors


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """B = 1 + max |a_i| / |a_n|; every real root lies in (-B, B)."""
    require_nonconstant(p)
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def poly_from_roots(roots: Sequence[RationalLike], leading: RationalLike = 1) -> Polynomial:
    """leading * prod(X - r) over the given roots (repeat a root for multiplicity)."""
    result = Polynomial((Fraction(leading),))
    for r in roots:
        result = poly_mul(result, Polynomial((-Fraction(r), 1)))
    return result
