"""
Monomial ideal combinatorics: minimal generators, the stability notions, restrictions
to the first variables, per-variable degrees and Krull dimension.

Every predicate quantifies over the minimal generators only; closure under
multiplication makes that sufficient.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .exceptions import DomainError, UsageError
from .ring import Polynomial, Term, degrevlex_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    min_gens: Tuple[Term, ...]

    def contains(self, term: Term) -> bool:
        return any(g.divides(term) for g in self.min_gens)

    def is_zero(self) -> bool:
        return not self.min_gens

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.min_gens)

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.min_gens), default=0)

    def generator_degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({g.degree for g in self.min_gens}))


@dataclass(frozen=True)
class QuasiStabilityObstruction:
    """m in J with x_i^s || m such that no x_j^t m / x_i^s lies in J (1-based i, j)."""

    generator: Term
    i: int
    j: int


def minimal_generators(terms: Iterable[Term], n: Optional[int] = None) -> MonomialIdeal:
    terms = sorted({Term(t) for t in terms}, key=degrevlex_key)
    if n is None:
        if not terms:
            raise UsageError("an empty generating set needs an explicit arity")
        n = len(terms[0])
    kept = []
    for t in terms:
        if len(t) != n:
            raise UsageError(f"term {t} does not have arity {n}")
        if not any(g.divides(t) for g in kept):
            kept.append(t)
    return MonomialIdeal(n, tuple(kept))


def leading_ideal(polys: Iterable[Polynomial], n: int) -> MonomialIdeal:
    """<LT(f) : f in polys>; a Groebner basis gives LT(I)."""
    return minimal_generators((f.leading_term for f in polys if f), n)


def _shift(m: Term, up: int, down: int, t: int = 1, s: int = 1) -> Term:
    # x_up^t * m / x_down^s with 0-based indices
    exps = list(m)
    exps[up] += t
    exps[down] -= s
    return Term(exps)


def is_strongly_stable(J: MonomialIdeal) -> bool:
    for m in J.min_gens:
        for i in m.support():
            for j in range(i):
                if not J.contains(_shift(m, j, i)):
                    return False
    return True


def is_stable(J: MonomialIdeal) -> bool:
    for m in J.min_gens:
        if m.is_one():
            continue
        c = cls_index(m)
        for j in range(c):
            if not J.contains(_shift(m, j, c)):
                return False
    return True


def cls_index(m: Term) -> int:
    """0-based index of the last variable occurring in m."""
    return max(m.support())


def quasi_stability_obstruction(J: MonomialIdeal) -> Optional[QuasiStabilityObstruction]:
    """
    None when J is quasi stable. A power x_j^t with t beyond deg_j(J) never helps,
    so the search for t stops at the largest generator degree.
    """
    bound = J.max_degree
    for m in J.min_gens:
        for i in sorted(m.support()):
            s = m[i]
            for j in range(i):
                if not any(J.contains(_shift(m, j, i, t, s)) for t in range(bound + 1)):
                    logger.debug(f"Quasi-stability fails at {m}: x{i + 1} -> x{j + 1}")
                    return QuasiStabilityObstruction(m, i + 1, j + 1)
    return None


def is_quasi_stable(J: MonomialIdeal) -> bool:
    return quasi_stability_obstruction(J) is None


def restrict_last(J: MonomialIdeal, j: int) -> MonomialIdeal:
    """J|_{x_{n-j+1} = ... = x_n = 0}, as an ideal of the first n-j variables."""
    if not 0 <= j < J.n:
        raise UsageError(f"cannot restrict {j} of {J.n} variables")
    keep = J.n - j
    return MonomialIdeal(
        keep, tuple(Term(g[:keep]) for g in J.min_gens if not any(g[keep:]))
    )


def restrict_generators(generators: Sequence[Polynomial], j: int) -> list:
    """Polynomial version of restrict_last: substitute zero for the last j variables."""
    restricted = [f.restrict_last(j) for f in generators]
    return [f for f in restricted if f]


def deg_i(J: MonomialIdeal, i: int) -> int:
    if not 1 <= i <= J.n:
        raise UsageError(f"variable index {i} outside 1..{J.n}")
    return max((g[i - 1] for g in J.min_gens), default=0)


def deg_table(J: MonomialIdeal) -> Dict[int, int]:
    return {i: deg_i(J, i) for i in range(1, J.n + 1)}


def dimension(J: MonomialIdeal) -> int:
    """Largest set of variables containing the support of no minimal generator."""
    if J.is_unit():
        raise DomainError("the unit ideal has no dimension")
    supports = [g.support() for g in J.min_gens]
    for size in range(J.n, -1, -1):
        for chosen in combinations(range(J.n), size):
            free = frozenset(chosen)
            if not any(s <= free for s in supports):
                return size
    return 0


def has_pure_power(J: MonomialIdeal, i: int) -> bool:
    """x_i^e in J for some e (1-based i)."""
    return any(g.support() == frozenset({i - 1}) for g in J.min_gens)


def is_noether_position(ideal) -> bool:
    """
    True when k[x_{n-D+1},...,x_n] -> P/I is integral, i.e. LT(I) holds a pure power of
    every x_i with i <= n - D. Accepts LT(I) directly or homogeneous generators of I.
    """
    if isinstance(ideal, MonomialIdeal):
        J = ideal
    else:
        from .groebner import buchberger

        basis, _ = buchberger(ideal)
        J = leading_ideal(basis.generators, basis.n)
    D = dimension(J)
    return all(has_pure_power(J, i) for i in range(1, J.n - D + 1))


def cp_gap_check(J: MonomialIdeal, d: int) -> bool:
    """
    Crystallisation: once some degree s >= d carries no minimal generator in degree s+1,
    no minimal generator appears above s. Equivalent to every degree in d+1..max being hit.
    """
    degrees = set(J.generator_degrees())
    top = J.max_degree
    return all(s in degrees for s in range(d + 1, top + 1))
