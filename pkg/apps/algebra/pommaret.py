"""
Pommaret division and involutive completion.

An element with leading term m of class c = cls(m) may be multiplied by x_c, ..., x_n
only. A Pommaret basis H of I writes I as the direct sum of the cones k[x_c..x_n]*h;
it exists exactly when LT(I) is quasi stable. Its maximal degree is reg(I) and
n minus its maximal class is depth(I).
"""
import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple, Union

from django.conf import settings

from .exceptions import CappedResultError, DomainError
from .groebner import GroebnerBasis, normal_form
from .ring import Polynomial, Term, degrevlex_key, terms_of_degree
from .stability import (
    MonomialIdeal,
    QuasiStabilityObstruction,
    leading_ideal,
    quasi_stability_obstruction,
)

logger = logging.getLogger(__name__)


def cls(t: Term) -> int:
    """1-based index of the last variable occurring in t."""
    if not any(t):
        raise DomainError("the class of 1 is undefined")
    return max(i for i, e in enumerate(t) if e) + 1


def pommaret_divides(b: Term, a: Term) -> bool:
    """True iff b | a and a/b only involves x_cls(b), ..., x_n."""
    c = cls(b)
    if not b.divides(a):
        return False
    return not any(a[i] - b[i] for i in range(c - 1))


@dataclass(frozen=True)
class PommaretElement:
    polynomial: Polynomial

    @property
    def leading_term(self) -> Term:
        return self.polynomial.leading_term

    @property
    def cls(self) -> int:
        return cls(self.leading_term)

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def multiplicative(self) -> Tuple[int, ...]:
        return tuple(range(self.cls, self.polynomial.n + 1))


@dataclass(frozen=True)
class PommaretBasis:
    n: int
    elements: Tuple[PommaretElement, ...]

    @property
    def max_degree(self) -> int:
        return max((e.degree for e in self.elements), default=0)

    @property
    def max_class(self) -> int:
        return max((e.cls for e in self.elements), default=0)

    @property
    def polynomials(self) -> Tuple[Polynomial, ...]:
        return tuple(e.polynomial for e in self.elements)

    @property
    def leading_terms(self) -> Tuple[Term, ...]:
        return tuple(e.leading_term for e in self.elements)


@dataclass(frozen=True)
class NotQuasiStable:
    """Completion verdict. Either a stability obstruction or a fired degree guard."""

    obstruction: Optional[QuasiStabilityObstruction]
    cap: Optional[int] = None

    @property
    def cap_reached(self) -> bool:
        return self.cap is not None


def _heap_key(t: Term):
    return -t.degree, tuple(reversed(t))


def involutive_representation(
    f: Polynomial, basis: Union[PommaretBasis, Sequence[Polynomial]], reverse_scan: bool = False
) -> Tuple[Dict[int, Polynomial], Polynomial]:
    """
    f = sum_k multipliers[k] * h_k + remainder, every multiplier in the multiplicative
    variables of h_k and no term of the remainder Pommaret divisible by any LT(h_k).
    `reverse_scan` looks for divisors from the end of the basis instead of the front.
    """
    polys = list(basis.polynomials if isinstance(basis, PommaretBasis) else basis)
    divisors = [(k, h.leading_term, h) for k, h in enumerate(polys) if h]
    if reverse_scan:
        divisors.reverse()
    acc = f.as_dict()
    heap = [(_heap_key(t), t) for t in acc]
    heapq.heapify(heap)
    remainder: Dict[Term, Fraction] = {}
    multipliers: Dict[int, Dict[Term, Fraction]] = {}
    while heap:
        _, t = heapq.heappop(heap)
        c = acc.pop(t, 0)
        if not c:
            continue
        for k, lt, h in divisors:
            if pommaret_divides(lt, t):
                q = t.quotient(lt)
                factor = c / h.leading_coefficient
                slot = multipliers.setdefault(k, {})
                slot[q] = slot.get(q, 0) + factor
                for ht, hc in h:
                    if ht == lt:
                        continue
                    nt = ht.times(q)
                    value = acc.get(nt, 0) - factor * hc
                    if nt not in acc:
                        heapq.heappush(heap, (_heap_key(nt), nt))
                    if value:
                        acc[nt] = value
                    else:
                        acc.pop(nt, None)
                break
        else:
            remainder[t] = c
    return (
        {k: Polynomial(f.n, coefs) for k, coefs in multipliers.items() if any(coefs.values())},
        Polynomial._from_clean(f.n, remainder),
    )


def involutive_normal_form(f: Polynomial, basis: Union[PommaretBasis, Sequence[Polynomial]]) -> Polynomial:
    return involutive_representation(f, basis)[1]


def _autoreduce(polys: List[Polynomial]) -> List[Polynomial]:
    # drop elements whose leading term another element Pommaret-divides, re-reducing them
    while True:
        for k, h in enumerate(polys):
            others = polys[:k] + polys[k + 1:]
            if any(pommaret_divides(g.leading_term, h.leading_term) for g in others):
                r = involutive_normal_form(h, others)
                polys = others + ([r.monic()] if r else [])
                break
        else:
            return polys


def _prolongations(polys: Sequence[Polynomial]):
    n = polys[0].n
    products = []
    for h in polys:
        lt = h.leading_term
        for j in range(1, cls(lt)):
            x = Term.variable(n, j)
            products.append((degrevlex_key(lt.times(x)), j, h.shift(x)))
    products.sort(key=lambda item: (item[0], item[1]))
    return [p for _, _, p in products]


def _complete(polys: List[Polynomial], cap: int) -> List[Polynomial]:
    polys = _autoreduce([p.monic() for p in polys if p])
    while True:
        for product in _prolongations(polys):
            r = involutive_normal_form(product, polys)
            if r:
                break
        else:
            return polys
        if r.degree > cap:
            raise CappedResultError(f"completion reached degree {r.degree} above the cap {cap}", cap, polys)
        logger.debug(f"Completion adds an element of degree {r.degree}")
        polys = _autoreduce(polys + [r.monic()])


def _sorted_basis(n: int, polys: Sequence[Polynomial]) -> PommaretBasis:
    ordered = sorted(polys, key=lambda p: degrevlex_key(p.leading_term))
    return PommaretBasis(n, tuple(PommaretElement(p) for p in ordered))


def pommaret_completion(
    G: GroebnerBasis, degree_cap: Optional[int] = None
) -> Union[PommaretBasis, NotQuasiStable]:
    """
    Pommaret basis of <G> from its reduced Groebner basis. Quasi-stability of LT(I) is
    decided first, so the completion itself always runs on a finite problem.
    Tails are normalised to m - NF(m, G), which makes H the reduced Groebner basis
    whenever LT(I) is stable.
    """
    cap = settings.STABLEGB_DEGREE_CAP if degree_cap is None else degree_cap
    J = leading_ideal(G.generators, G.n)
    obstruction = quasi_stability_obstruction(J)
    if obstruction is not None:
        logger.info(f"No finite Pommaret basis: {obstruction}")
        return NotQuasiStable(obstruction)
    try:
        completed = _complete(list(G.generators), cap)
    except CappedResultError:
        logger.warning(f"Pommaret completion stopped at the degree cap {cap}")
        return NotQuasiStable(None, cap)
    normalised = []
    for h in completed:
        m = Polynomial.monomial(h.leading_term)
        normalised.append(m - normal_form(m, G.generators))
    for product in _prolongations(normalised):
        if involutive_normal_form(product, normalised):
            raise DomainError("completion did not close under prolongation")
    return _sorted_basis(G.n, normalised)


def monomial_pommaret_basis(J: MonomialIdeal, degree_cap: Optional[int] = None) -> PommaretBasis:
    """Pommaret basis of a quasi-stable monomial ideal; DomainError otherwise."""
    if quasi_stability_obstruction(J) is not None:
        raise DomainError("monomial ideal is not quasi stable")
    cap = settings.STABLEGB_DEGREE_CAP if degree_cap is None else degree_cap
    completed = _complete([Polynomial.monomial(m) for m in J.min_gens], cap)
    return _sorted_basis(J.n, completed)


def reg_from_pommaret(H: PommaretBasis) -> int:
    return H.max_degree


def depth_from_pommaret(H: PommaretBasis) -> int:
    return H.n - H.max_class


def restrict_basis(H: PommaretBasis, lam: int) -> PommaretBasis:
    """Pommaret basis of I|_{x_{n-lam+1}=...=x_n=0}; the variables set to zero are all multiplicative."""
    if lam < 0 or lam > depth_from_pommaret(H):
        raise DomainError(f"cannot restrict {lam} variables, depth is {depth_from_pommaret(H)}")
    return PommaretBasis(
        H.n - lam, tuple(PommaretElement(e.polynomial.restrict_last(lam)) for e in H.elements)
    )


def check_cone_decomposition(H: PommaretBasis, up_to_degree: Optional[int] = None) -> bool:
    """Every term of <LT(H)> up to the given degree has exactly one Pommaret divisor in LT(H)."""
    top = H.max_degree + 3 if up_to_degree is None else up_to_degree
    lts = H.leading_terms
    for s in range(top + 1):
        for t in terms_of_degree(H.n, s):
            divisors = sum(1 for m in lts if pommaret_divides(m, t))
            in_ideal = any(m.divides(t) for m in lts)
            if divisors != (1 if in_ideal else 0):
                logger.debug(f"Cone decomposition fails at {t}: {divisors} divisors")
                return False
    return True
