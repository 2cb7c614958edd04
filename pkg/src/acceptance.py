"""Property checks of the sign rules against the exact Sturm oracle.

Each check draws its own seeded corpus, runs one property per case and
returns a CheckResult. `run_acceptance` runs them all; the `verify` CLI
command and the slow test suite both go through it.
"""
import itertools
import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from src.budan import budan_bound, derivative_sequence, generalized_budan_bound, variation_at
from src.corpus import (
    make_rng,
    random_lacunary,
    random_polynomial,
    random_positive_rational,
    random_rational,
    random_real_rooted,
    random_rooted_with_multiplicities,
)
from src.errors import SignRulesError
from src.isolation import isolate_real_roots
from src.poly_core import (
    Polynomial,
    cauchy_root_bound,
    evaluate,
    poly_mul,
    reflect,
    strip_zero_roots,
)
from src.sign_rules import (
    Sign,
    alternation_signs,
    count_alternations,
    count_permanences,
    counts_under_assignment,
    de_gua_blocks,
    descartes_report,
    endpoint_parity,
    newton_gap_violations,
    permanence_signs,
)
from src.sturm_oracle import count_distinct_roots, count_roots_with_multiplicity, exact_root_counts, sturm_chain

logger = logging.getLogger(__name__)

MAX_EXAMPLES = 5

FULL_SIZES: Dict[str, int] = {
    "descartes_soundness": 10000,
    "equality_case": 2000,
    "convention_minimality": 500,
    "duality": 10000,
    "descartes_strategy": 2000,
    "de_gua": 10000,
    "budan_soundness": 10000,
    "taylor_agreement": 2000,
    "isolation": 1000,
    "generalized_budan": 1000,
}


@dataclass
class CheckResult:
    name: str
    cases: int
    failed: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "cases": self.cases,
            "failed": self.failed,
            "passed": self.passed,
            "failures": list(self.failures),
            "seconds": round(self.seconds, 3),
        }


def _describe(case: Any) -> str:
    """Counterexample text; polynomials print as descending coefficient lists."""
    if isinstance(case, Polynomial):
        return "[" + ", ".join(str(c) for c in reversed(case.coeffs)) + "]"
    if isinstance(case, tuple):
        return " ".join(_describe(part) for part in case)
    if isinstance(case, dict):
        return "{" + ", ".join(f"{k}: {v}" for k, v in case.items()) + "}"
    if isinstance(case, list):
        return "[" + ", ".join(str(x) for x in case) + "]"
    return str(case)


def _run(
    name: str,
    count: int,
    rng: np.random.Generator,
    draw: Callable[[np.random.Generator], Any],
    verify: Callable[[Any], Optional[str]],
) -> CheckResult:
    result = CheckResult(name=name, cases=count)
    start = time.perf_counter()
    for _ in range(count):
        case = draw(rng)
        try:
            problem = verify(case)
        except SignRulesError as err:
            problem = f"raised {type(err).__name__}: {err}"
        if problem:
            result.failed += 1
            if len(result.failures) < MAX_EXAMPLES:
                result.failures.append(f"{_describe(case)}: {problem}")
    result.seconds = time.perf_counter() - start
    logger.debug("%s: %d case(s), %d failure(s) in %.2fs", name, count, result.failed, result.seconds)
    return result


def _interval(rng: np.random.Generator, p: Polynomial) -> Tuple[Fraction, Fraction]:
    # left endpoint must not be a root
    a = random_rational(rng)
    while evaluate(p, a) == 0:
        a += Fraction(1, 7)
    return a, a + random_positive_rational(rng)


def check_worked_examples() -> CheckResult:
    x2m1 = Polynomial((-1, 0, 1))
    quartic = Polynomial((0, -1, 0, 0, 3))
    expected = [
        ("v(X^2 - 1)", lambda: count_alternations(x2m1), 1),
        ("c(X^2 - 1)", lambda: count_permanences(x2m1), 1),
        ("v(3X^4 - X)", lambda: count_alternations(quartic), 1),
        ("c(3X^4 - X)", lambda: count_permanences(quartic), 0),
        ("z0(3X^4 - X)", lambda: descartes_report(quartic).counts.zero_roots, 1),
        ("De Gua loss of 3X^4 - X", lambda: [b.loss for b in de_gua_blocks(quartic)], [2]),
        ("alternation signs of 3X^4 - X", lambda: [str(s) for s in alternation_signs(quartic)], ["+", "+", "+", "-"]),
        ("permanence signs of 3X^4 - X", lambda: [str(s) for s in permanence_signs(quartic)], ["+", "-", "+", "-"]),
    ]
    result = CheckResult(name="worked_examples", cases=len(expected))
    start = time.perf_counter()
    for label, compute, want in expected:
        got = compute()
        if got != want:
            result.failed += 1
            result.failures.append(f"{label}: got {got}, expected {want}")
    result.seconds = time.perf_counter() - start
    return result


def check_descartes_soundness(count: int, seed: Optional[int] = None) -> CheckResult:
    def verify(p: Polynomial) -> Optional[str]:
        exact = exact_root_counts(p)
        v, c = count_alternations(p), count_permanences(p)
        if v < exact.positive or c < exact.negative:
            return f"v={v}, c={c} below z+={exact.positive}, z-={exact.negative}"
        if (v - exact.positive) % 2 or (c - exact.negative) % 2:
            return f"parity mismatch: v={v}, c={c}, z+={exact.positive}, z-={exact.negative}"
        return None

    return _run("descartes_soundness", count, make_rng(seed), random_polynomial, verify)


def check_equality_case(count: int, seed: Optional[int] = None) -> CheckResult:
    def verify(case: Tuple[Polynomial, List[Fraction]]) -> Optional[str]:
        p, roots = case
        positive = sum(1 for r in roots if r > 0)
        negative = sum(1 for r in roots if r < 0)
        v, c = count_alternations(p), count_permanences(p)
        if (v, c) != (positive, negative):
            return f"(v, c) = ({v}, {c}) but roots give ({positive}, {negative})"
        gaps = newton_gap_violations(p)
        if gaps:
            return f"coefficient gaps at {gaps} for a real-rooted polynomial"
        return None

    return _run("equality_case", count, make_rng(seed), random_real_rooted, verify)


def check_convention_minimality(count: int, seed: Optional[int] = None) -> CheckResult:
    def verify(p: Polynomial) -> Optional[str]:
        q, _ = strip_zero_roots(p)
        zeros = sum(1 for c in q.coeffs if c == 0)
        best_alt = best_perm = None
        for assignment in itertools.product((Sign.PLUS, Sign.MINUS), repeat=zeros):
            alt, perm = counts_under_assignment(p, assignment)
            best_alt = alt if best_alt is None else min(best_alt, alt)
            best_perm = perm if best_perm is None else min(best_perm, perm)
        v, c = count_alternations(p), count_permanences(p)
        if (best_alt, best_perm) != (v, c):
            return f"minima ({best_alt}, {best_perm}) but convention gives ({v}, {c})"
        return None

    return _run("convention_minimality", count, make_rng(seed), random_lacunary, verify)


def check_duality(count: int, seed: Optional[int] = None) -> CheckResult:
    def verify(p: Polynomial) -> Optional[str]:
        c, v_reflected = count_permanences(p), count_alternations(reflect(p))
        if c != v_reflected:
            return f"c(P) = {c} but v(P(-X)) = {v_reflected}"
        return None

    return _run("duality", count, make_rng(seed), random_polynomial, verify)


def check_descartes_strategy(count: int, seed: Optional[int] = None) -> CheckResult:
    def draw(rng: np.random.Generator) -> Tuple[Polynomial, Fraction]:
        return random_polynomial(rng), random_positive_rational(rng)

    def verify(case: Tuple[Polynomial, Fraction]) -> Optional[str]:
        q, alpha = case
        v_q, c_q = count_alternations(q), count_permanences(q)
        v_up = count_alternations(poly_mul(Polynomial((-alpha, 1)), q))
        c_up = count_permanences(poly_mul(Polynomial((alpha, 1)), q))
        if v_up < v_q + 1:
            return f"v((X - a)Q) = {v_up} < v(Q) + 1 = {v_q + 1}"
        if c_up < c_q + 1:
            return f"c((X + a)Q) = {c_up} < c(Q) + 1 = {c_q + 1}"
        return None

    return _run("descartes_strategy", count, make_rng(seed), draw, verify)


def check_de_gua(count: int, seed: Optional[int] = None) -> CheckResult:
    def verify(p: Polynomial) -> Optional[str]:
        report = descartes_report(p)
        lower = report.imaginary_lower
        imaginary = exact_root_counts(p).imaginary(p.degree)
        losses = sum(b.loss for b in de_gua_blocks(p))
        if losses != lower:
            return f"block losses sum to {losses}, expected {lower}"
        if lower > imaginary or lower % 2 or imaginary % 2:
            return f"imaginary lower bound {lower} vs exact {imaginary}"
        if endpoint_parity(p) != report.positive_parity:
            return f"endpoint parity {endpoint_parity(p)} != v mod 2 = {report.positive_parity}"
        return None

    return _run("de_gua", count, make_rng(seed), random_polynomial, verify)


def check_budan_soundness(count: int, seed: Optional[int] = None) -> CheckResult:
    def draw(rng: np.random.Generator) -> Tuple[Polynomial, Fraction, Fraction]:
        p = random_polynomial(rng)
        return (p,) + _interval(rng, p)

    def verify(case: Tuple[Polynomial, Fraction, Fraction]) -> Optional[str]:
        p, a, b = case
        report = budan_bound(p, a, b)
        actual = count_roots_with_multiplicity(p, a, b)
        if report.v_at_a < report.v_at_b:
            return f"v(P, a) = {report.v_at_a} < v(P, b) = {report.v_at_b}"
        if report.bound < actual or (report.bound - actual) % 2:
            return f"bound {report.bound} vs exact count {actual}"
        return None

    return _run("budan_soundness", count, make_rng(seed), draw, verify)


def check_taylor_agreement(count: int, seed: Optional[int] = None) -> CheckResult:
    def draw(rng: np.random.Generator) -> Tuple[Polynomial, Fraction]:
        return random_polynomial(rng), random_rational(rng)

    def verify(case: Tuple[Polynomial, Fraction]) -> Optional[str]:
        p, t = case
        shifted, direct = variation_at(p, t), variation_at(p, t, via_derivatives=True)
        if shifted != direct:
            return f"shifted count {shifted} != derivative count {direct}"
        beyond = variation_at(p, cauchy_root_bound(p))
        if beyond != 0:
            return f"v(P, B) = {beyond} at the root bound"
        if evaluate(p, 0) != 0 and variation_at(p, 0) != count_alternations(p):
            return "v(P, 0) differs from v(P)"
        return None

    return _run("taylor_agreement", count, make_rng(seed), draw, verify)


def check_isolation(count: int, seed: Optional[int] = None) -> CheckResult:
    def verify(case: Tuple[Polynomial, Dict[Fraction, int]]) -> Optional[str]:
        p, constructed = case
        roots = isolate_real_roots(p)
        if len(roots) != len(constructed):
            return f"isolated {len(roots)} root(s), constructed {len(constructed)}"
        chain = sturm_chain(p)
        for left, right in zip(roots, roots[1:]):
            if left.high > right.low or (left.high == right.low and right.is_exact):
                return f"overlapping roots {left} and {right}"
        for root in roots:
            inside = [r for r in constructed if root.contains(r)]
            if len(inside) != 1:
                return f"{root} holds {len(inside)} constructed roots"
            if root.is_exact:
                if evaluate(p, root.low) != 0:
                    return f"exact point {root.low} is not a root"
            elif count_distinct_roots(chain, root.low, root.high) != 1:
                return f"oracle finds more than one root in ({root.low}, {root.high}]"
            if root.multiplicity != constructed[inside[0]]:
                return f"multiplicity {root.multiplicity} at {inside[0]}, constructed {constructed[inside[0]]}"
        return None

    return _run("isolation", count, make_rng(seed), random_rooted_with_multiplicities, verify)


def check_generalized_budan(count: int, seed: Optional[int] = None) -> CheckResult:
    def draw(rng: np.random.Generator) -> Tuple[Polynomial, Fraction, Fraction]:
        p = random_polynomial(rng)
        return (p,) + _interval(rng, p)

    def verify(case: Tuple[Polynomial, Fraction, Fraction]) -> Optional[str]:
        p, a, b = case
        general = generalized_budan_bound(derivative_sequence(p, a), derivative_sequence(p, b))
        bound = budan_bound(p, a, b).bound
        if general != bound:
            return f"sequence bound {general} != polynomial bound {bound}"
        return None

    return _run("generalized_budan", count, make_rng(seed), draw, verify)


CHECKS: Dict[str, Callable[[int, Optional[int]], CheckResult]] = {
    "descartes_soundness": check_descartes_soundness,
    "equality_case": check_equality_case,
    "convention_minimality": check_convention_minimality,
    "duality": check_duality,
    "descartes_strategy": check_descartes_strategy,
    "de_gua": check_de_gua,
    "budan_soundness": check_budan_soundness,
    "taylor_agreement": check_taylor_agreement,
    "isolation": check_isolation,
    "generalized_budan": check_generalized_budan,
}


def run_acceptance(seed: Optional[int] = None, scale: float = 1.0) -> List[CheckResult]:
    """Run every check with FULL_SIZES scaled by `scale` (at least one case each)."""
    results = [check_worked_examples()]
    for name, check in CHECKS.items():
        size = max(1, int(round(FULL_SIZES[name] * scale)))
        logger.debug("running %s on %d case(s)", name, size)
        results.append(check(size, seed))
    return results
