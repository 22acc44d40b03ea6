"""
Standard monomials N(I) and the finite subsets F(I), F~(I) that drive the degree bounds.

F(I) = N(I) when dim(I) = 0; otherwise F(I) collects the standard terms tau*x_n^a of
degree < deg(I) whose x_n-free part tau lies in F(I_n), with I_n = I|_{x_n=0}.
F~(I) is the older variant taking tau from N(I_n) instead; it is kept only to show
where that variant breaks.
"""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Set, Tuple

from .exceptions import DomainError
from .groebner import GroebnerBasis
from .ring import Term, terms_of_degree
from .stability import MonomialIdeal, dimension, has_pure_power, is_strongly_stable, leading_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FSetLevel:
    n: int
    dimension: int
    degree: int
    F: FrozenSet[Term]
    tilde_F: FrozenSet[Term]


@dataclass(frozen=True)
class FSetReport:
    """levels[0] is I itself, levels[1] is I_n, and so on down to dimension zero."""

    levels: Tuple[FSetLevel, ...]
    tilde_is_mora_variant: bool = True

    @property
    def F(self) -> FrozenSet[Term]:
        return self.levels[0].F

    @property
    def F_size(self) -> int:
        return len(self.levels[0].F)

    @property
    def tildeF(self) -> FrozenSet[Term]:
        return self.levels[0].tilde_F

    @property
    def tildeF_size(self) -> int:
        return len(self.levels[0].tilde_F)


@dataclass(frozen=True)
class MoraCheck:
    a_lhs: int
    a_rhs: int
    b_lhs: int
    b_rhs: int
    mora_a_rhs: int
    mora_b_lhs: int
    mora_b_rhs: int

    @property
    def holds_a(self) -> bool:
        return self.a_lhs <= self.a_rhs

    @property
    def holds_b(self) -> bool:
        return self.b_lhs <= self.b_rhs

    @property
    def mora_holds_a(self) -> bool:
        return self.a_lhs <= self.mora_a_rhs

    @property
    def mora_holds_b(self) -> bool:
        return self.mora_b_lhs <= self.mora_b_rhs


def standard_monomials(J: MonomialIdeal, up_to_degree: int) -> Set[Term]:
    return {
        m
        for s in range(up_to_degree + 1)
        for m in terms_of_degree(J.n, s)
        if not J.contains(m)
    }


def _zero_dim_bound(J: MonomialIdeal) -> int:
    # a standard term has degree at most sum(e_i - 1) over the pure powers x_i^{e_i}
    total = 0
    for i in range(J.n):
        powers = [g[i] for g in J.min_gens if g.support() == frozenset({i})]
        total += min(powers) - 1
    return total


def all_standard_monomials(J: MonomialIdeal) -> Set[Term]:
    """The finite set N(J) of a zero-dimensional J."""
    if not all(has_pure_power(J, i) for i in range(1, J.n + 1)):
        raise DomainError("N(I) is infinite for a positive-dimensional ideal")
    return standard_monomials(J, _zero_dim_bound(J))


def _lift(J: MonomialIdeal, lower: FrozenSet[Term], degree: int) -> FrozenSet[Term]:
    # standard terms tau * x_n^a with tau in `lower` and total degree < degree
    found = set()
    for tau in lower:
        for a in range(degree - tau.degree):
            m = Term(tau + (a,))
            if not J.contains(m):
                found.add(m)
    return frozenset(found)


def _levels(basis: GroebnerBasis) -> List[FSetLevel]:
    J = leading_ideal(basis.generators, basis.n)
    D = dimension(J)
    degree = basis.max_degree
    if D == 0:
        N = frozenset(all_standard_monomials(J))
        return [FSetLevel(basis.n, 0, degree, N, N)]
    lower_basis = basis.restrict_last(1)
    lower = _levels(lower_basis)
    J_lower = leading_ideal(lower_basis.generators, lower_basis.n)
    N_lower = frozenset(standard_monomials(J_lower, degree - 1))
    level = FSetLevel(basis.n, D, degree, _lift(J, lower[0].F, degree), _lift(J, N_lower, degree))
    logger.debug(f"F-set level n={basis.n}: #F={len(level.F)}, #F~={len(level.tilde_F)}")
    return [level] + lower


def f_set(basis: GroebnerBasis) -> FSetReport:
    """F(I) with the data of every restriction level; I must be in strongly stable position."""
    if not is_strongly_stable(leading_ideal(basis.generators, basis.n)):
        raise DomainError("F(I) needs LT(I) strongly stable")
    return FSetReport(tuple(_levels(basis)))


def f_tilde_set(basis: GroebnerBasis) -> FrozenSet[Term]:
    J = leading_ideal(basis.generators, basis.n)
    degree = basis.max_degree
    if dimension(J) == 0:
        return frozenset(all_standard_monomials(J))
    lower_basis = basis.restrict_last(1)
    J_lower = leading_ideal(lower_basis.generators, lower_basis.n)
    return _lift(J, frozenset(standard_monomials(J_lower, degree - 1)), degree)


def lemma_mora_check(basis: GroebnerBasis, d: int) -> MoraCheck:
    """
    (a) deg(I) <= max{d, deg(I_n)} + #F(I_n) and (b) #F(I) <= max{d, #F(I_n)}^2, next to
    the F~ versions deg(I) <= deg(I_n) + #F~(I_n) and #F~(I) <= #F~(I_n)^2.
    d is the maximal degree of the original generators.
    """
    if basis.n < 2:
        raise DomainError("the restriction I_n needs at least two variables")
    top = f_set(basis).levels[0]
    lower_basis = basis.restrict_last(1)
    lower = f_set(lower_basis).levels[0]
    lower_tilde = f_tilde_set(lower_basis)
    return MoraCheck(
        a_lhs=top.degree,
        a_rhs=max(d, lower.degree) + len(lower.F),
        b_lhs=len(top.F),
        b_rhs=max(d, len(lower.F)) ** 2,
        mora_a_rhs=lower.degree + len(lower_tilde),
        mora_b_lhs=len(top.tilde_F),
        mora_b_rhs=len(lower_tilde) ** 2,
    )
