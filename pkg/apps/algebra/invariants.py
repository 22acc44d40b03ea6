"""
Hilbert data of monomial ideals and the ideal invariants built on it: dimension,
depth, Castelnuovo-Mumford regularity, regular sequences and generic initial ideals.

Polynomial ideals are reduced to LT(I), which has the same Hilbert function.
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

import numpy as np
from django.conf import settings
from sympy import Poly, QQ, ZZ, Symbol, binomial, expand_func

from .exceptions import DomainError, InconclusiveError
from .groebner import buchberger
from .pommaret import PommaretBasis, depth_from_pommaret, pommaret_completion, reg_from_pommaret
from .ring import LinearChange, Polynomial, Term, apply_linear_change, require_homogeneous
from .stability import MonomialIdeal, dimension, leading_ideal, minimal_generators
from .transform import Position, transform_to_position

logger = logging.getLogger(__name__)

t = Symbol("t")
s = Symbol("s")


@dataclass(frozen=True)
class HilbertData:
    """HS(t) = numerator(t) / (1-t)^D with numerator(1) != 0."""

    n: int
    numerator: Poly
    D: int
    hp: Poly
    hilb: int
    hf_table: Dict[int, int] = field(default_factory=dict)
    k_polynomial: Optional[Poly] = None

    @property
    def numerator_coefficients(self) -> Tuple[int, ...]:
        """Ascending coefficients p_0, p_1, ..."""
        return tuple(int(c) for c in reversed(self.numerator.all_coeffs()))

    @property
    def hp_coefficients(self) -> Tuple[str, ...]:
        """Ascending coefficients of HP(s) as exact rational strings."""
        if self.hp.is_zero:
            return ("0",)
        return tuple(str(c) for c in reversed(self.hp.all_coeffs()))

    def hf(self, degree: int) -> int:
        return _hf_from_k_polynomial(self.k_polynomial, self.n, degree)

    def hp_value(self, degree: int) -> int:
        return int(self.hp.eval(degree))


def _colon(gens: FrozenSet[Term], m: Term) -> FrozenSet[Term]:
    n = len(m)
    quotients = (Term(max(a - b, 0) for a, b in zip(g, m)) for g in gens)
    return frozenset(minimal_generators(quotients, n).min_gens)


@lru_cache(maxsize=4096)
def _k_polynomial(gens: FrozenSet[Term]) -> Poly:
    """Numerator of HS over (1-t)^n, by N(J + <m>) = N(J) - t^deg(m) N(J : m)."""
    if not gens:
        return Poly(1, t, domain=ZZ)
    ordered = sorted(gens, key=lambda g: (g.degree, g))
    supports = [g.support() for g in ordered]
    if all(a.isdisjoint(b) for k, a in enumerate(supports) for b in supports[k + 1:]):
        result = Poly(1, t, domain=ZZ)
        for g in ordered:
            result = result * Poly(1 - t ** g.degree, t, domain=ZZ)
        return result
    m = ordered[-1]
    rest = frozenset(ordered[:-1])
    return _k_polynomial(rest) - Poly(t ** m.degree, t, domain=ZZ) * _k_polynomial(_colon(rest, m))


def k_polynomial(J: MonomialIdeal) -> Poly:
    return _k_polynomial(frozenset(J.min_gens))


def _hf_from_k_polynomial(K: Poly, n: int, degree: int) -> int:
    if degree < 0:
        return 0
    coefficients = list(reversed(K.all_coeffs()))
    return sum(
        int(c) * comb(degree - k + n - 1, n - 1)
        for k, c in enumerate(coefficients)
        if c and degree - k >= 0
    )


def hilbert_function(J: MonomialIdeal, degree: int) -> int:
    """Number of degree-`degree` terms outside J."""
    if degree < 0:
        raise DomainError("the Hilbert function is defined for degrees >= 0")
    return _hf_from_k_polynomial(k_polynomial(J), J.n, degree)


def _hilbert_polynomial(p: Poly, D: int) -> Poly:
    if D == 0:
        return Poly(0, s, domain=QQ)
    expr = 0
    for k, c in enumerate(reversed(p.all_coeffs())):
        if c:
            expr += c * expand_func(binomial(s - k + D - 1, D - 1))
    return Poly(expr, s, domain=QQ)


def hilbert_series(J: MonomialIdeal, table_to: Optional[int] = None) -> HilbertData:
    if J.is_unit():
        raise DomainError("the unit ideal has no Hilbert series")
    K = k_polynomial(J)
    p, D = K, J.n
    one_minus_t = Poly(1 - t, t, domain=ZZ)
    while D > 0 and p.eval(1) == 0:
        p = p.exquo(one_minus_t)
        D -= 1
    hp = _hilbert_polynomial(p, D)
    # HF(m) = HP(m) for every m > deg(p) - D
    top = p.degree() + 1
    hilb = max(top, 0)
    while hilb > 0 and _hf_from_k_polynomial(K, J.n, hilb - 1) == int(hp.eval(hilb - 1)):
        hilb -= 1
    last = max(hilb, p.degree()) + 1 if table_to is None else table_to
    table = {m: _hf_from_k_polynomial(K, J.n, m) for m in range(last + 1)}
    return HilbertData(J.n, p, D, hp, hilb, table, K)


def hilbert_regularity(J: MonomialIdeal) -> int:
    return hilbert_series(J).hilb


def closed_form_regularity(data: HilbertData, shift: Optional[int] = None) -> int:
    """max{0, deg(p) - shift + 1}; with the default shift D this equals hilb."""
    shift = data.D if shift is None else shift
    return max(0, data.numerator.degree() - shift + 1)


def ideal_leading_ideal(generators: Sequence[Polynomial]) -> MonomialIdeal:
    basis, _ = buchberger(generators)
    return leading_ideal(basis.generators, basis.n)


def ideal_hilbert_data(generators: Sequence[Polynomial]) -> HilbertData:
    return hilbert_series(ideal_leading_ideal(generators))


def padded_degrees(generators: Sequence[Polynomial], n: int) -> Tuple[int, ...]:
    """d_1 >= ... >= d_n, filled up with ones."""
    degrees = sorted((f.degree for f in generators), reverse=True)[:n]
    return tuple(degrees + [1] * (n - len(degrees)))


def stabilization_check(generators: Sequence[Polynomial]) -> bool:
    """For dim <= 1: HF is constant from degree d_1 + ... + d_n - n + 1 onward."""
    n = require_homogeneous(generators)
    data = ideal_hilbert_data(generators)
    if data.D > 1:
        raise DomainError(f"stabilization needs dimension <= 1, got {data.D}")
    start = sum(padded_degrees(generators, n)) - n + 1
    value = data.hf(start)
    return all(data.hf(m) == value for m in range(start, max(start, data.hilb) + 2))


@dataclass(frozen=True)
class RegularSequenceCriteria:
    hilbert_series: bool
    dimension: bool


def regular_sequence_criteria(generators: Sequence[Polynomial]) -> RegularSequenceCriteria:
    """HS = prod(1 - t^{d_i}) / (1-t)^n, and independently D = n - k."""
    n = require_homogeneous(generators)
    k = len(generators)
    if k > n:
        return RegularSequenceCriteria(False, False)
    J = ideal_leading_ideal(generators)
    expected = Poly(1, t, domain=ZZ)
    for f in generators:
        expected = expected * Poly(1 - t ** f.degree, t, domain=ZZ)
    return RegularSequenceCriteria(k_polynomial(J) == expected, dimension(J) == n - k)


def is_regular_sequence(generators: Sequence[Polynomial]) -> bool:
    criteria = regular_sequence_criteria(generators)
    if criteria.hilbert_series != criteria.dimension:
        logger.warning(f"Regular sequence criteria disagree: {criteria}")
    return criteria.hilbert_series


def gin(
    generators: Sequence[Polynomial],
    seed=0,
    trials: Optional[int] = None,
    retries: Optional[int] = None,
    coeff_bound: Optional[int] = None,
) -> MonomialIdeal:
    """LT(A.I) for random dense A; returned only when `trials` independent draws agree."""
    n = require_homogeneous(generators)
    trials = settings.STABLEGB_GIN_TRIALS if trials is None else trials
    retries = settings.STABLEGB_GIN_RETRIES if retries is None else retries
    bound = settings.STABLEGB_COEFF_BOUND if coeff_bound is None else coeff_bound
    if trials < 2:
        raise DomainError("gin needs at least two agreeing trials")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    for attempt in range(retries + 1):
        found = []
        for _ in range(trials):
            change = LinearChange.random(n, rng, bound)
            found.append(ideal_leading_ideal([apply_linear_change(change, f) for f in generators]))
        if all(J == found[0] for J in found):
            return found[0]
        logger.info(f"gin trials disagree (attempt {attempt}), bound {bound} -> {2 * bound}")
        bound *= 2
    raise InconclusiveError(f"gin trials still disagree after {retries} retries")


def pommaret_in_position(generators: Sequence[Polynomial], seed=0) -> PommaretBasis:
    """Pommaret basis of A.I for a change A putting I into quasi stable position."""
    moved = transform_to_position(generators, Position.QUASI_STABLE, seed)
    H = pommaret_completion(moved.basis)
    if not isinstance(H, PommaretBasis):
        raise DomainError(f"completion failed in quasi stable position: {H}")
    return H


def regularity(generators: Sequence[Polynomial], seed=0) -> int:
    """reg(I): maximal degree of a Pommaret basis in quasi stable position."""
    return reg_from_pommaret(pommaret_in_position(generators, seed))


def depth(generators: Sequence[Polynomial], seed=0) -> int:
    """depth(P/I): n minus the maximal class of a Pommaret basis in quasi stable position."""
    return depth_from_pommaret(pommaret_in_position(generators, seed))
