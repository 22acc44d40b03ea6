"""
Worked examples with their known answers. Each fixture returns a FixtureOutcome that
lists every expectation next to the computed value.
"""
import logging
from typing import Callable, Iterable, List, Sequence

from apps.algebra import bounds
from apps.algebra.bounds import Formula
from apps.algebra.fset import f_set, f_tilde_set, lemma_mora_check
from apps.algebra.groebner import buchberger
from apps.algebra.invariants import gin, padded_degrees
from apps.algebra.ring import RingContext, Term, default_ring, format_term, parse_polynomial
from apps.algebra.stability import (
    dimension,
    has_pure_power,
    is_noether_position,
    is_quasi_stable,
    is_strongly_stable,
    leading_ideal,
    restrict_generators,
)

from .schemas import FixtureOutcome
from .verify import VerificationEngine

logger = logging.getLogger(__name__)


def _ideal(n: int, texts: Iterable[str]):
    ring = default_ring(n)
    return ring, [parse_polynomial(text, ring) for text in texts]


def _names(terms: Iterable[Term], ring: RingContext) -> List[str]:
    return sorted(format_term(t, ring) for t in terms)


def green_fixture(seed: int = 0) -> FixtureOutcome:
    """LT(I) and gin(I) are both strongly stable yet differ."""
    outcome = FixtureOutcome("green")
    ring, gens = _ideal(3, ["x1*x3", "x1*x2 + x2^2", "x1^2"])
    basis, _ = buchberger(gens)
    J = leading_ideal(basis.generators, 3)
    G = gin(gens, seed)
    outcome.expect(
        "leading ideal", sorted(["x1*x3", "x1*x2", "x1^2", "x2^2*x3", "x2^3"]), _names(J.min_gens, ring)
    )
    outcome.expect("leading ideal strongly stable", True, is_strongly_stable(J))
    outcome.expect("gin", sorted(["x2^2", "x1*x2", "x1^2", "x1*x3^2"]), _names(G.min_gens, ring))
    outcome.expect("gin strongly stable", True, is_strongly_stable(G))
    outcome.expect("gin differs from leading ideal", True, G != J)
    return outcome


def two_variable_fixture(seed: int = 0) -> FixtureOutcome:
    """<x1^2, x1*x2 + x2^2>: #F(I) = 4 <= 4 and deg(I) = 3 <= 4."""
    outcome = FixtureOutcome("two_variable")
    ring, gens = _ideal(2, ["x1^2", "x1*x2 + x2^2"])
    basis, _ = buchberger(gens)
    report = f_set(basis)
    hs_a = bounds.bound(Formula.HS_A, 2, 2, 0)
    zero_dim = bounds.bound(Formula.MACAULAY_0DIM, 2, 2, 0, 0, padded_degrees(gens, 2))
    outcome.expect("gin", sorted(["x1*x2", "x1^2", "x2^3"]), _names(gin(gens, seed).min_gens, ring))
    outcome.expect("#F", 4, report.F_size)
    outcome.expect("degree", 3, basis.max_degree)
    outcome.expect("hs_A(2,2,0)", "4", hs_a.text)
    outcome.expect("degree within hs_A", True, hs_a.admits(basis.max_degree))
    outcome.expect("#F within fset bound", True, bounds.bound(Formula.FSET_BOUND, 2, 2, 0).admits(report.F_size))
    outcome.expect("macaulay_0dim((2,2))", "3", zero_dim.text)
    return outcome


def mora_remark_fixture() -> FixtureOutcome:
    """<x1^2, x1*x2^11>: the F~ inequalities fail while the F versions hold."""
    outcome = FixtureOutcome("mora_remark")
    ring, gens = _ideal(2, ["x1^2", "x1*x2^11"])
    basis, _ = buchberger(gens)
    d = max(f.degree for f in gens)
    lower = f_set(basis.restrict_last(1))
    check = lemma_mora_check(basis, d)
    outcome.expect("degree", 12, basis.max_degree)
    outcome.expect("F(I_2)", ["1", "x1"], _names(lower.F, ring.drop_last(1)))
    outcome.expect("#F~", 23, len(f_tilde_set(basis)))
    outcome.expect("#F", 23, f_set(basis).F_size)
    outcome.expect("F~ version of (a)", (12, 4, False), (check.a_lhs, check.mora_a_rhs, check.mora_holds_a))
    outcome.expect("F~ version of (b)", (23, 4, False), (check.mora_b_lhs, check.mora_b_rhs, check.mora_holds_b))
    outcome.expect("corrected (a)", (12, 14, True), (check.a_lhs, check.a_rhs, check.holds_a))
    outcome.expect("corrected (b)", (23, 144, True), (check.b_lhs, check.b_rhs, check.holds_b))
    return outcome


def counterexample_generators(t: int) -> List[str]:
    """Degrees t, t+1, t+1 in four variables; deg(I) = t^2 + 1."""
    return [
        f"x1*x2^{t - 1} - x3^{t}",
        f"x1^{t + 1} - x2*x3^{t - 1}*x4",
        f"x1^{t}*x3 - x2^{t}*x4",
    ]


def counterexample_fixture(t: int) -> FixtureOutcome:
    """
    The degree t^2 + 1 outgrows d_1 + d_2 + d_3 - 3 once t >= 3 (at t = 2 both
    are 5), but I has dimension 2 and
    I|_{x4=0} is not quasi stable, so neither contradicts the dimension-one bound.
    """
    outcome = FixtureOutcome(f"counterexample_t{t}")
    ring, gens = _ideal(4, counterexample_generators(t))
    basis, _ = buchberger(gens)
    J = leading_ideal(basis.generators, 4)
    D = dimension(J)
    degree_sum = t + 2 * (t + 1) - 3
    witness = parse_polynomial(f"x3^{t * t + 1} - x2^{t * t}*x4", ring)
    outcome.metadata = {"basis_size": len(basis.generators)}

    outcome.expect("degree", t * t + 1, basis.max_degree)
    outcome.expect("dimension", 2, D)
    if t >= 3:
        outcome.expect("degree exceeds degree sum", True, basis.max_degree > degree_sum)
    if t != 4:
        outcome.expect(f"x3^{t * t + 1} - x2^{t * t}*x4 in basis", True, witness in basis.generators)
        return outcome

    expected = ["x1*x2^3", "x1^4*x3", "x1^5", "x1^3*x3^5", "x1^2*x3^9", "x1*x3^13", "x3^17"]
    outcome.expect("leading ideal", sorted(expected), _names(J.min_gens, ring))
    outcome.expect("degree sum", 11, degree_sum)
    lowered = restrict_generators(gens, 1)
    lower_ring = ring.drop_last(1)
    lower_basis, _ = buchberger(lowered)
    J_lower = leading_ideal(lower_basis.generators, 3)
    outcome.expect("restricted dimension", 1, dimension(J_lower))
    outcome.expect("restricted quasi stable", False, is_quasi_stable(J_lower))
    outcome.expect("restricted pure power of x2", False, has_pure_power(J_lower, 2))
    outcome.expect("restricted Noether position", False, is_noether_position(J_lower))
    outcome.expect(
        "restricted leading ideal",
        _names((Term(m[:-1]) for m in J.min_gens), lower_ring),
        _names(J_lower.min_gens, lower_ring),
    )
    return outcome


def bound_table_fixture() -> FixtureOutcome:
    outcome = FixtureOutcome("bound_table")
    rows = bounds.remark_comparisons()
    outcome.metadata = {
        "rows": [
            {
                "left": r.left.formula_id.value,
                "right": r.right.formula_id.value,
                "inputs": [r.left.inputs["n"], r.left.inputs["d"], r.left.inputs["D"]],
                "left_value": r.left.text,
                "right_value": r.right.text,
                "printed": r.printed,
                "computed": r.computed,
            }
            for r in rows
        ]
    }
    outcome.expect("hs_A(5,3,4)", "13122", bounds.bound(Formula.HS_A, 5, 3, 4).text)
    outcome.expect("hs_C(5,3,4)", "390625", bounds.bound(Formula.HS_C, 5, 3, 4).text)
    computed = [(r.left.text, r.right.text, r.computed, r.discrepancy) for r in rows]
    outcome.expect(
        "comparisons",
        [
            ("50", "81", "<", True),
            ("135", "137", "<", True),
            ("13122", "390625", "<", False),
            ("512", "13122", "<", False),
            ("8192", "2592", ">", False),
            ("512", "1296", "<", False),
        ],
        computed,
    )
    return outcome


def affine_fixture(seed: int = 0) -> FixtureOutcome:
    """Four affine points: the homogenized ideal is quasi stable of dimension one."""
    outcome = FixtureOutcome("affine")
    ring, gens = _ideal(2, ["x1^2 - x2", "x2^2 - x1"])
    report = VerificationEngine(seed).verify_affine(ring, gens)
    outcome.metadata = {"basis": report.metadata.get("basis", [])}
    outcome.expect("degree", 2, report.quantities.get("deg"))
    outcome.expect("lifted depth", 1, report.quantities.get("lifted_depth"))
    outcome.expect("status", "PASS", report.status)
    return outcome


FIXTURES: Sequence[Callable[[int], FixtureOutcome]] = (
    green_fixture,
    two_variable_fixture,
    lambda seed: mora_remark_fixture(),
    lambda seed: counterexample_fixture(2),
    lambda seed: counterexample_fixture(3),
    lambda seed: counterexample_fixture(4),
    lambda seed: bound_table_fixture(),
    affine_fixture,
)


def run_fixtures(seed: int = 0) -> List[FixtureOutcome]:
    outcomes = []
    for fixture in FIXTURES:
        outcome = fixture(seed)
        if outcome.status != "PASS":
            bad = [e.label for e in outcome.expectations if not e.ok]
            logger.error(f"Fixture {outcome.name} failed: {bad}")
        outcomes.append(outcome)
    return outcomes
