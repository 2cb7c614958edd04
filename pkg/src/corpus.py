"""Seeded random polynomials for property checks."""
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.poly_core import Polynomial, poly_from_roots, poly_mul

DEFAULT_SEED = 20240601
MAX_DEGREE = 12
COEFF_BOUND = 20
ZERO_RUN_SHARE = 0.3
MAX_INTERNAL_ZEROS = 12


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)


def _nonzero_int(rng: np.random.Generator, bound: int) -> int:
    value = int(rng.integers(1, bound + 1))
    return value if rng.random() < 0.5 else -value


def random_rational(rng: np.random.Generator, num_bound: int = 20, den_max: int = 8) -> Fraction:
    return Fraction(int(rng.integers(-num_bound, num_bound + 1)), int(rng.integers(1, den_max + 1)))


def random_positive_rational(rng: np.random.Generator, num_bound: int = 20, den_max: int = 8) -> Fraction:
    return Fraction(int(rng.integers(1, num_bound + 1)), int(rng.integers(1, den_max + 1)))


def random_polynomial(
    rng: np.random.Generator,
    max_degree: int = MAX_DEGREE,
    bound: int = COEFF_BOUND,
    zero_run_share: float = ZERO_RUN_SHARE,
) -> Polynomial:
    """Degree 1..max_degree, integer coefficients in [-bound, bound].

    A zero_run_share of the draws get a forced run of zeros strictly inside
    the coefficient list.
    """
    forced = max_degree >= 2 and rng.random() < zero_run_share
    n = int(rng.integers(2 if forced else 1, max_degree + 1))
    coeffs = [int(c) for c in rng.integers(-bound, bound + 1, size=n + 1)]
    coeffs[n] = _nonzero_int(rng, bound)
    if forced:
        start = int(rng.integers(1, n))
        length = int(rng.integers(1, n - start + 1))
        for i in range(start, start + length):
            coeffs[i] = 0
        if coeffs[0] == 0:
            coeffs[0] = _nonzero_int(rng, bound)
    return Polynomial(tuple(coeffs))


def random_lacunary(rng: np.random.Generator, max_zeros: int = MAX_INTERNAL_ZEROS, bound: int = COEFF_BOUND) -> Polynomial:
    """Polynomial with up to max_zeros zero coefficients inside its counting window."""
    zeros = int(rng.integers(1, max_zeros + 1))
    nonzero_inside = int(rng.integers(0, 4))
    inner = [0] * zeros + [_nonzero_int(rng, bound) for _ in range(nonzero_inside)]
    rng.shuffle(inner)
    trailing = int(rng.integers(0, 3)) if rng.random() < 0.2 else 0
    coeffs = [0] * trailing + [_nonzero_int(rng, bound)] + inner + [_nonzero_int(rng, bound)]
    return Polynomial(tuple(coeffs))


def random_real_rooted(rng: np.random.Generator, max_factors: int = 8) -> Tuple[Polynomial, List[Fraction]]:
    """Product of 1..max_factors rational linear factors and a nonzero leading constant."""
    k = int(rng.integers(1, max_factors + 1))
    roots = [random_rational(rng, num_bound=10, den_max=4) for _ in range(k)]
    return poly_from_roots(roots, leading=random_positive_rational(rng) * (1 if rng.random() < 0.5 else -1)), roots


def random_rooted_with_multiplicities(
    rng: np.random.Generator,
    max_degree: int = 10,
    max_multiplicity: int = 3,
    quadratic_share: float = 0.3,
) -> Tuple[Polynomial, Dict[Fraction, int]]:
    """Polynomial with known distinct rational roots and their multiplicities.

    Some draws carry an extra irreducible quadratic X^2 + k (k > 0) so the
    result has non-real roots too.
    """
    roots: Dict[Fraction, int] = {}
    budget = max_degree
    with_quadratic = rng.random() < quadratic_share
    if with_quadratic:
        budget -= 2
    target = int(rng.integers(1, budget + 1))
    degree = 0
    while degree < target:
        r = random_rational(rng, num_bound=12, den_max=4)
        mult = min(int(rng.integers(1, max_multiplicity + 1)), target - degree)
        if r in roots:
            continue
        roots[r] = mult
        degree += mult
    p = poly_from_roots([r for r, m in roots.items() for _ in range(m)])
    if with_quadratic:
        p = poly_mul(p, Polynomial((Fraction(int(rng.integers(1, 10)), int(rng.integers(1, 4))), 0, 1)))
    return p, roots
