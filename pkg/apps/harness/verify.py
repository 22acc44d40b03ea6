"""
Verification of the degree, regularity and F-set statements on concrete ideals.

Every statement is checked only when its hypotheses hold for the ideal at hand; the
others are reported as not applicable together with the reason.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from django.conf import settings

from apps.algebra import bounds
from apps.algebra.bounds import BoundValue, Formula
from apps.algebra.exceptions import CappedResultError, InconclusiveError, TransformationError
from apps.algebra.fset import FSetReport, f_set, lemma_mora_check
from apps.algebra.groebner import (
    GroebnerBasis,
    affine_basis,
    buchberger,
    cached_buchberger,
    hilbert_function_by_rank,
    normal_form,
    truncated_gb,
)
from apps.algebra.invariants import (
    HilbertData,
    closed_form_regularity,
    gin,
    hilbert_series,
    padded_degrees,
    pommaret_in_position,
    regular_sequence_criteria,
    stabilization_check,
)
from apps.algebra.pommaret import (
    NotQuasiStable,
    PommaretBasis,
    check_cone_decomposition,
    depth_from_pommaret,
    monomial_pommaret_basis,
    pommaret_completion,
    reg_from_pommaret,
    restrict_basis,
)
from apps.algebra.ring import (
    LinearChange,
    Polynomial,
    RingContext,
    apply_linear_change,
    format_polynomial,
    format_term,
    homogenize,
    require_homogeneous,
)
from apps.algebra.stability import (
    MonomialIdeal,
    cp_gap_check,
    dimension,
    is_noether_position,
    is_quasi_stable,
    is_stable,
    is_strongly_stable,
    leading_ideal,
    minimal_generators,
    restrict_generators,
    restrict_last,
)

from .schemas import FAIL, INCOMPLETE, PASS, CorpusSpec, TheoremCheck, VerificationReport

logger = logging.getLogger(__name__)


@dataclass
class IdealState:
    """Everything computed once per ideal and shared by the checks."""

    ring: RingContext
    generators: Sequence[Polynomial]
    n: int
    d: int
    degrees: tuple
    basis: GroebnerBasis
    J: MonomialIdeal
    D: int
    quasi: bool
    stable: bool
    strong: bool
    noether: bool
    pommaret: Union[PommaretBasis, NotQuasiStable]
    reg: int
    depth: int
    hilbert: HilbertData
    fsets: Optional[FSetReport]
    # I restricted to x_{n-depth+1} = ... = x_n = 0; only kept in quasi stable position with depth > 0
    restricted: Optional[GroebnerBasis]

    @property
    def deg(self) -> int:
        return self.basis.max_degree


def _not_applicable(theorem: str, reason: str) -> TheoremCheck:
    return TheoremCheck(theorem, False, reason=reason)


def _at_most(theorem: str, lhs: int, rhs: Union[int, BoundValue], **witness) -> TheoremCheck:
    if isinstance(rhs, BoundValue):
        return TheoremCheck(theorem, True, rhs.admits(lhs), lhs, rhs.text, witness=witness)
    return TheoremCheck(theorem, True, lhs <= rhs, lhs, rhs, witness=witness)


def _equal(theorem: str, lhs, rhs, **witness) -> TheoremCheck:
    return TheoremCheck(theorem, True, lhs == rhs, lhs, rhs, witness=witness)


def _terms(terms, ring: RingContext) -> List[str]:
    return [format_term(t, ring) for t in terms]


class VerificationEngine:
    def __init__(self, seed: int = 0):
        self.seed = seed

    # --- shared computations ---------------------------------------------------

    def _state(self, ring: RingContext, generators: Sequence[Polynomial]) -> IdealState:
        n = require_homogeneous(generators)
        basis = cached_buchberger(ring, generators)
        J = leading_ideal(basis.generators, n)
        D = dimension(J)
        quasi, stable, strong = is_quasi_stable(J), is_stable(J), is_strongly_stable(J)
        H = pommaret_completion(basis)
        if isinstance(H, NotQuasiStable) and H.cap_reached:
            raise CappedResultError("Pommaret completion hit the degree cap", H.cap)
        if isinstance(H, PommaretBasis):
            reg, depth = reg_from_pommaret(H), depth_from_pommaret(H)
        else:
            moved = pommaret_in_position(generators, self.seed)
            reg, depth = reg_from_pommaret(moved), depth_from_pommaret(moved)
        restricted = None
        if depth and isinstance(H, PommaretBasis):
            restricted, _ = buchberger(restrict_generators(generators, depth))
        return IdealState(
            ring=ring,
            generators=generators,
            n=n,
            d=max(f.degree for f in generators),
            degrees=padded_degrees(generators, n),
            basis=basis,
            J=J,
            D=D,
            quasi=quasi,
            stable=stable,
            strong=strong,
            noether=is_noether_position(J),
            pommaret=H,
            reg=reg,
            depth=depth,
            hilbert=hilbert_series(J),
            fsets=f_set(basis) if strong else None,
            restricted=restricted,
        )

    # --- individual statements ---------------------------------------------------

    def check_hilbert_function(self, st: IdealState) -> TheoremCheck:
        top = min(settings.STABLEGB_HF_CHECK_DEGREE, st.hilbert.hilb + 1)
        from_lt = [st.hilbert.hf(s) for s in range(top + 1)]
        by_rank = [hilbert_function_by_rank(st.generators, s) for s in range(top + 1)]
        return _equal("hilbert_function_of_leading_ideal", from_lt, by_rank)

    def check_dimension(self, st: IdealState) -> List[TheoremCheck]:
        checks = [_equal("dimension_is_pole_order", st.D, st.hilbert.D)]
        if st.strong and st.D > 0:
            lower = dimension(restrict_last(st.J, 1))
            checks.append(_equal("dimension_drops_by_one", st.D, lower + 1))
        else:
            checks.append(_not_applicable("dimension_drops_by_one", "needs strongly stable position and D > 0"))
        chain = (not st.strong or st.stable) and (not st.stable or st.quasi)
        checks.append(_equal("stability_chain", chain, True))
        if st.quasi:
            checks.append(_equal("quasi_stable_implies_noether", st.noether, True))
        if st.D <= 1:
            checks.append(_equal("noether_iff_quasi_stable_in_dim_le_1", st.noether, st.quasi))
        return checks

    def check_strongly_stable_bounds(self, st: IdealState) -> List[TheoremCheck]:
        if not st.strong:
            reason = "needs strongly stable position"
            return [
                _not_applicable(name, reason)
                for name in (
                    "degree_le_hs_A", "fset_le_bound", "degree_eq_reg_le_hs_C",
                    "degree_le_hs_C_recursion", "degree_le_hs_A_depth", "reg_le_hs_A_depth",
                    "fset_le_bound_depth", "restricted_fset_le_bound", "degree_eq_reg_le_hs_C_depth", "crystallisation",
                    "early_stop_agreement", "truncated_basis",
                )
            ]
        n, d, D, lam = st.n, st.d, st.D, st.depth
        checks = [
            _at_most("degree_le_hs_A", st.deg, bounds.bound(Formula.HS_A, n, d, D), D=D),
            _at_most("fset_le_bound", st.fsets.F_size, bounds.bound(Formula.FSET_BOUND, n, d, D), D=D),
        ]
        if D >= 1:
            hs_c = bounds.bound(Formula.HS_C, n, d, D)
            check = _at_most("degree_eq_reg_le_hs_C", st.reg, hs_c, D=D, degree=st.deg)
            check.holds = check.holds and st.deg == st.reg
            checks.append(check)
            checks.append(
                _at_most("degree_le_hs_C_recursion", st.deg, bounds.bound(Formula.HS_C_RECURSION, n, d, D), D=D)
            )
        else:
            checks.append(_not_applicable("degree_eq_reg_le_hs_C", "needs D >= 1"))
            checks.append(_not_applicable("degree_le_hs_C_recursion", "needs D >= 1"))
        if D > 1 and D > lam:
            refined = bounds.bound(Formula.HS_A_DEPTH, n, d, D, lam)
            checks.append(_at_most("degree_le_hs_A_depth", st.deg, refined, D=D, depth=lam))
            checks.append(_at_most("reg_le_hs_A_depth", st.reg, refined, D=D, depth=lam))
            checks.append(self.check_fset_depth_clause(st))
        else:
            for name in ("degree_le_hs_A_depth", "reg_le_hs_A_depth", "fset_le_bound_depth"):
                checks.append(_not_applicable(name, "needs D > 1 and D > depth"))
        checks.append(self.check_restricted_fset(st))
        if D >= 1 and D > lam:
            check = _at_most(
                "degree_eq_reg_le_hs_C_depth", st.reg, bounds.bound(Formula.HS_C_DEPTH, n, d, D, lam), D=D, depth=lam
            )
            check.holds = check.holds and st.deg == st.reg
            checks.append(check)
        else:
            checks.append(_not_applicable("degree_eq_reg_le_hs_C_depth", "needs D >= 1 and D > depth"))
        checks.append(_equal("crystallisation", cp_gap_check(st.J, d), True, d=d))
        early, trace = buchberger(st.generators, early_stop_if_stable=True)
        checks.append(
            _equal(
                "early_stop_agreement",
                [format_polynomial(g, st.ring) for g in early.generators],
                [format_polynomial(g, st.ring) for g in st.basis.generators],
                early_stop_degree=trace.early_stop_degree,
            )
        )
        checks.append(self.check_truncated_bases(st))
        return checks

    def check_fset_depth_clause(self, st: IdealState) -> TheoremCheck:
        """
        #F(I) and #F(I~) next to d^{(n-D)2^{D-depth-1}}. Depth reduction keeps degree and
        reg but not #F, and the comparison never fails a report.
        """
        printed = bounds.bound(Formula.FSET_BOUND_DEPTH, st.n, st.d, st.D, st.depth)
        restricted_size = f_set(st.restricted).F_size if st.restricted is not None else st.fsets.F_size
        check = _at_most(
            "fset_le_bound_depth", st.fsets.F_size, printed,
            D=st.D, depth=st.depth, restricted_F_size=restricted_size,
            restricted_holds=printed.admits(restricted_size),
        )
        check.gating = False
        return check

    def check_restricted_fset(self, st: IdealState) -> TheoremCheck:
        """#F(I~) against d^{(n-D)2^D} evaluated at (n - depth, d, D - depth)."""
        if st.restricted is None:
            return _not_applicable("restricted_fset_le_bound", "depth is 0")
        lower = leading_ideal(st.restricted.generators, st.restricted.n)
        if not is_strongly_stable(lower):
            return _not_applicable("restricted_fset_le_bound", "restriction is not strongly stable")
        lower_D = dimension(lower)
        rhs = bounds.bound(Formula.FSET_BOUND, st.restricted.n, st.d, lower_D)
        return _at_most(
            "restricted_fset_le_bound", f_set(st.restricted).F_size, rhs,
            depth=st.depth, restricted_dim=lower_D, F_size=st.fsets.F_size,
        )

    def check_truncated_bases(self, st: IdealState) -> TheoremCheck:
        """A certified G_t generates LT(<I_{<=t}>); from degree d on that is LT(I)."""
        low = min(f.degree for f in st.generators)
        certified = []
        for t in range(low, st.deg + 2):
            G_t = truncated_gb(st.generators, t)
            if not G_t.certified:
                continue
            head = [f for f in st.generators if f.degree <= t]
            expected, _ = buchberger(head)
            found = leading_ideal(G_t.generators, st.n)
            if found != leading_ideal(expected.generators, st.n):
                return TheoremCheck("truncated_basis", True, False, t, "LT(<I_{<=t}>)",
                                    witness={"t": t, "found": _terms(found.min_gens, st.ring)})
            if t >= st.d and found != st.J:
                return TheoremCheck("truncated_basis", True, False, t, "LT(I)",
                                    witness={"t": t, "found": _terms(found.min_gens, st.ring)})
            certified.append(t)
        return TheoremCheck("truncated_basis", True, True, witness={"certified_degrees": certified})

    def check_mora_lemma(self, st: IdealState) -> List[TheoremCheck]:
        if not st.strong or st.n < 2:
            reason = "needs strongly stable position and n >= 2"
            return [_not_applicable("mora_lemma_a", reason), _not_applicable("mora_lemma_b", reason)]
        m = lemma_mora_check(st.basis, st.d)
        return [
            _at_most("mora_lemma_a", m.a_lhs, m.a_rhs),
            _at_most("mora_lemma_b", m.b_lhs, m.b_rhs),
        ]

    def check_low_dimension(self, st: IdealState) -> List[TheoremCheck]:
        n, d, D, lam = st.n, st.d, st.D, st.depth
        checks = []
        if D <= 1:
            lazard = bounds.bound(Formula.LAZARD, n, d, D, lam, st.degrees)
            if st.quasi:
                checks.append(_at_most("lazard_degree", st.deg, lazard, depth=lam))
            else:
                checks.append(_not_applicable("lazard_degree", "needs quasi stable position"))
            checks.append(_at_most("lazard_reg", st.reg, lazard, depth=lam))
            checks.append(_equal("hilbert_stabilization", stabilization_check(st.generators), True))
            checks.append(_at_most("hilb_le_degree_sum", st.hilbert.hilb, sum(st.degrees) - n + 1))
        else:
            for name in ("lazard_degree", "lazard_reg", "hilbert_stabilization", "hilb_le_degree_sum"):
                checks.append(_not_applicable(name, f"needs D <= 1, got D = {D}"))
        if D == 0:
            checks.append(_at_most("zero_dim_degree_sum", st.deg, bounds.bound(Formula.MACAULAY_0DIM, n, d, 0, 0, st.degrees)))
            product = 1
            for x in st.degrees:
                product *= x
            count = sum(st.hilbert.hf_table.values())
            checks.append(_at_most("zero_dim_standard_count", count, product))
            checks.append(_equal("zero_dim_numerator_at_one", int(st.hilbert.numerator.eval(1)), count))
        else:
            checks.append(_not_applicable("zero_dim_degree_sum", "needs D = 0"))
            checks.append(_not_applicable("zero_dim_standard_count", "needs D = 0"))
        if D == lam and st.noether:
            checks.append(_at_most("cohen_macaulay_noether", st.deg, bounds.bound(Formula.CM_NOETHER, n, d, D, lam, st.degrees)))
        else:
            checks.append(_not_applicable("cohen_macaulay_noether", "needs D = depth and Noether position"))
        return checks

    def check_pommaret(self, st: IdealState) -> List[TheoremCheck]:
        H = st.pommaret
        if not isinstance(H, PommaretBasis):
            reason = "needs quasi stable position"
            return [
                _not_applicable(name, reason)
                for name in (
                    "pommaret_cone_decomposition", "pommaret_is_groebner", "pommaret_matches_monomial_completion",
                    "degree_le_reg", "depth_restriction_degree", "depth_restriction_reg",
                    "pommaret_degree_le_hs_A_depth", "stable_pommaret_is_reduced_basis",
                )
            ]
        checks = [
            _equal("pommaret_cone_decomposition", check_cone_decomposition(H), True),
            _equal(
                "pommaret_is_groebner",
                _terms(minimal_generators(H.leading_terms, st.n).min_gens, st.ring),
                _terms(st.J.min_gens, st.ring),
            ),
            _equal(
                "pommaret_matches_monomial_completion",
                sorted(_terms(H.leading_terms, st.ring)),
                sorted(_terms(monomial_pommaret_basis(st.J).leading_terms, st.ring)),
            ),
        ]
        check = _at_most("degree_le_reg", st.deg, st.reg)
        if st.strong:
            check.holds = check.holds and st.deg == st.reg
        checks.append(check)
        checks.extend(self.check_depth_restriction(st, H))
        if st.D > 1 and st.D > st.depth:
            refined = bounds.bound(Formula.HS_A_DEPTH, st.n, st.d, st.D, st.depth)
            check = _at_most("pommaret_degree_le_hs_A_depth", H.max_degree, refined, D=st.D, depth=st.depth)
            check.holds = check.holds and st.deg <= H.max_degree
            checks.append(check)
        else:
            checks.append(_not_applicable("pommaret_degree_le_hs_A_depth", "needs D > 1 and D > depth"))
        if st.stable:
            checks.append(
                _equal(
                    "stable_pommaret_is_reduced_basis",
                    sorted(format_polynomial(h, st.ring) for h in H.polynomials),
                    sorted(format_polynomial(g, st.ring) for g in st.basis.generators),
                )
            )
        else:
            checks.append(_not_applicable("stable_pommaret_is_reduced_basis", "needs stable position"))
        return checks

    def check_depth_restriction(self, st: IdealState, H: PommaretBasis) -> List[TheoremCheck]:
        lam = st.depth
        if lam == 0:
            return [
                _not_applicable("depth_restriction_degree", "depth is 0"),
                _not_applicable("depth_restriction_reg", "depth is 0"),
            ]
        lower = st.restricted
        lower_H = pommaret_completion(lower)
        lower_reg = reg_from_pommaret(lower_H) if isinstance(lower_H, PommaretBasis) else None
        return [
            _equal("depth_restriction_degree", st.deg, lower.max_degree, depth=lam),
            _equal("depth_restriction_reg", st.reg, lower_reg, depth=lam,
                   restricted_basis_degree=restrict_basis(H, lam).max_degree),
        ]

    def check_hilbert_regularity(self, st: IdealState) -> TheoremCheck:
        return _equal("hilb_closed_form", st.hilbert.hilb, closed_form_regularity(st.hilbert))

    def check_regular_sequence(self, st: IdealState) -> TheoremCheck:
        if len(st.generators) > st.n:
            return _not_applicable("regular_sequence_criteria", "more generators than variables")
        criteria = regular_sequence_criteria(st.generators)
        return _equal("regular_sequence_criteria", criteria.hilbert_series, criteria.dimension)

    def check_invariance(self, st: IdealState) -> TheoremCheck:
        """HF, dimension, depth and reg recomputed after an independent random change."""
        rng = np.random.default_rng(self.seed + 1)
        change = LinearChange.random(st.n, rng, settings.STABLEGB_CORPUS_COEFF_BOUND)
        moved = [apply_linear_change(change, f) for f in st.generators]
        basis, _ = buchberger(moved)
        data = hilbert_series(leading_ideal(basis.generators, st.n))
        H = pommaret_in_position(moved, rng)
        before = {
            "numerator": st.hilbert.numerator_coefficients, "D": st.D, "depth": st.depth, "reg": st.reg,
        }
        after = {
            "numerator": data.numerator_coefficients, "D": data.D,
            "depth": depth_from_pommaret(H), "reg": reg_from_pommaret(H),
        }
        return _equal("invariance_under_linear_change", before, after)

    def check_gin_regularity(self, st: IdealState) -> TheoremCheck:
        """reg(I) is the largest degree of a minimal generator of gin(I) in characteristic 0."""
        G = gin(st.generators, np.random.default_rng(self.seed + 2))
        return _equal("reg_eq_gin_generator_degree", st.reg, G.max_degree, gin=_terms(G.min_gens, st.ring))

    # --- entry points ----------------------------------------------------------

    def verify(self, ring: RingContext, generators: Sequence[Polynomial], ideal_id: str = "ideal") -> VerificationReport:
        report = VerificationReport(ideal_id=ideal_id, status=PASS, n=ring.n, seed=self.seed)
        try:
            st = self._state(ring, generators)
            report.position = {
                "quasi_stable": st.quasi, "stable": st.stable,
                "strongly_stable": st.strong, "noether": st.noether,
            }
            report.quantities = {
                "d": st.d, "degrees": list(st.degrees), "deg": st.deg, "reg": st.reg,
                "dim": st.D, "depth": st.depth, "hilb": st.hilbert.hilb,
                "F_size": st.fsets.F_size if st.fsets else None,
                "hs_numerator": list(st.hilbert.numerator_coefficients),
            }
            report.metadata = {
                "basis": [format_polynomial(g, ring) for g in st.basis.generators],
                "lt_ideal": _terms(st.J.min_gens, ring),
            }
            report.checks.append(self.check_hilbert_function(st))
            report.checks.extend(self.check_dimension(st))
            report.checks.extend(self.check_strongly_stable_bounds(st))
            report.checks.extend(self.check_mora_lemma(st))
            report.checks.extend(self.check_low_dimension(st))
            report.checks.extend(self.check_pommaret(st))
            report.checks.append(self.check_hilbert_regularity(st))
            report.checks.append(self.check_regular_sequence(st))
            report.checks.append(self.check_invariance(st))
            report.checks.append(self.check_gin_regularity(st))
        except (CappedResultError, InconclusiveError, TransformationError) as exc:
            logger.error(f"Verification of {ideal_id} incomplete: {exc}")
            report.status = INCOMPLETE
            report.reasons.append(str(exc))
            return report
        failed = report.failed_checks()
        if failed:
            report.status = FAIL
            report.reasons = [f"{c.theorem}: {c.lhs} vs {c.rhs}" for c in failed]
            if st.fsets is not None:
                report.metadata["F"] = _terms(sorted(st.fsets.F), ring)
            logger.error(f"{ideal_id}: {len(failed)} failed checks")
        return report

    def verify_affine(self, ring: RingContext, generators: Sequence[Polynomial], ideal_id: str = "affine") -> VerificationReport:
        """Degree bound for a non-homogeneous ideal through its homogenized generators."""
        report = VerificationReport(ideal_id=ideal_id, status=PASS, n=ring.n, seed=self.seed)
        n = ring.n
        lifted = [homogenize(f) for f in generators]
        try:
            basis = affine_basis(generators)
            lifted_basis, _ = buchberger(lifted)
        except CappedResultError as exc:
            report.status = INCOMPLETE
            report.reasons.append(str(exc))
            return report
        J = leading_ideal(lifted_basis.generators, n + 1)
        D = dimension(J)
        H = pommaret_completion(lifted_basis)
        degrees = sorted((f.degree for f in generators), reverse=True)
        report.quantities = {"deg": basis.max_degree, "lifted_dim": D, "d": degrees[0], "degrees": degrees}
        report.metadata = {"basis": [format_polynomial(g, ring) for g in basis.generators]}
        report.checks.append(
            _equal("affine_basis_reduces_generators", all(not normal_form(f, basis.generators) for f in generators), True)
        )
        if isinstance(H, PommaretBasis) and D <= 1:
            lam = depth_from_pommaret(H)
            report.position = {"quasi_stable": True}
            report.quantities["lifted_depth"] = lam
            bound = bounds.bound(Formula.LAZARD_AFFINE, n, degrees[0], D, lam, degrees)
            report.checks.append(_at_most("lazard_affine_degree", basis.max_degree, bound, depth=lam))
        else:
            report.position = {"quasi_stable": isinstance(H, PommaretBasis)}
            report.checks.append(
                _not_applicable("lazard_affine_degree", "homogenized ideal needs quasi stable position and D <= 1")
            )
        failed = report.failed_checks()
        if failed:
            report.status = FAIL
            report.reasons = [f"{c.theorem}: {c.lhs} vs {c.rhs}" for c in failed]
        return report

    def verify_corpus(self, spec: CorpusSpec) -> List[VerificationReport]:
        """One task per member; eager mode runs them in-process. Merged by member index."""
        from .corpus import generate_corpus
        from .serializers import VerificationReportSerializer
        from .tasks import verify_member_task

        members = generate_corpus(spec)
        payloads = [m.to_payload() for m in members]
        if getattr(settings, "CELERY_TASK_ALWAYS_EAGER", False):
            results = [verify_member_task.apply(args=[p, self.seed]).get() for p in payloads]
        else:
            import stablegb.celery  # noqa: F401  binds shared tasks to the configured broker

            pending = [verify_member_task.delay(p, self.seed) for p in payloads]
            results = [r.get() for r in pending]
        results.sort(key=lambda data: data["metadata"].get("index", 0))
        return [VerificationReportSerializer.to_report(data) for data in results]


def verify_theorems(ring: RingContext, generators: Sequence[Polynomial], seed: int = 0, ideal_id: str = "ideal") -> VerificationReport:
    return VerificationEngine(seed).verify(ring, generators, ideal_id)


def verify_affine(ring: RingContext, generators: Sequence[Polynomial], seed: int = 0) -> VerificationReport:
    return VerificationEngine(seed).verify_affine(ring, generators)


def verify_corpus(spec: CorpusSpec, seed: int = 0) -> List[VerificationReport]:
    return VerificationEngine(seed).verify_corpus(spec)


def exercised_dimensions(reports: Sequence[VerificationReport]) -> Dict[str, List[int]]:
    """Per statement, the dimensions D at which it was actually checked."""
    seen: Dict[str, set] = {}
    for report in reports:
        for check in report.checks:
            if check.applicable and "D" in check.witness:
                seen.setdefault(check.theorem, set()).add(check.witness["D"])
    return {theorem: sorted(values) for theorem, values in sorted(seen.items())}
