"""
Buchberger's algorithm for homogeneous ideals, degree by degree (normal strategy).

Pairs are treated in increasing degree of their lcm; ties go by degrevlex on the
lcm and then by insertion order of the generators. Buchberger's coprime and chain
criteria are applied. Everything is exact over the rationals.
"""
import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from django.conf import settings
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import cache
from .exceptions import CappedResultError, DomainError
from .ring import (
    Polynomial,
    RingContext,
    Term,
    dehomogenize,
    degrevlex_key,
    format_ideal,
    homogenize,
    parse_polynomial,
    require_homogeneous,
    terms_of_degree,
)
from .stability import is_strongly_stable, leading_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    n: int
    generators: Tuple[Polynomial, ...]
    reduced: bool = True
    order = "degrevlex"

    @property
    def max_degree(self) -> int:
        """deg(I, <) when reduced."""
        return max((g.degree for g in self.generators), default=0)

    @property
    def leading_terms(self) -> Tuple[Term, ...]:
        return tuple(g.leading_term for g in self.generators)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self.generators)

    def restrict_last(self, j: int) -> "GroebnerBasis":
        """Basis of I|_{x_{n-j+1}=...=x_n=0}; for degrevlex the restriction stays a Groebner basis."""
        restricted = [g.restrict_last(j) for g in self.generators]
        return GroebnerBasis(self.n - j, tuple(interreduce(restricted)))


@dataclass
class DegreeLog:
    pairs: int = 0
    skipped: int = 0
    inputs: int = 0
    new: int = 0


@dataclass
class BuchbergerTrace:
    degrees: Dict[int, DegreeLog] = field(default_factory=dict)
    early_stop_degree: Optional[int] = None


@dataclass(frozen=True)
class TruncatedBasis:
    degree: int
    generators: Tuple[Polynomial, ...]
    certified: bool


def _heap_key(t: Term):
    # smallest heap key == greatest term
    return -t.degree, tuple(reversed(t))


def normal_form(f: Polynomial, basis: Iterable[Polynomial]) -> Polynomial:
    """Full reduction of f by the leading terms of `basis` (first divisor wins)."""
    divisors = [(g.leading_term, g) for g in basis if g]
    if not divisors or not f:
        return f
    acc = f.as_dict()
    heap = [(_heap_key(t), t) for t in acc]
    heapq.heapify(heap)
    remainder: Dict[Term, Fraction] = {}
    while heap:
        _, t = heapq.heappop(heap)
        c = acc.pop(t, 0)
        if not c:
            continue
        for lt, g in divisors:
            if lt.divides(t):
                q = t.quotient(lt)
                factor = c / g.leading_coefficient
                for gt, gc in g:
                    if gt == lt:
                        continue
                    nt = gt.times(q)
                    if nt in acc:
                        value = acc[nt] - factor * gc
                        if value:
                            acc[nt] = value
                        else:
                            del acc[nt]
                    else:
                        acc[nt] = -factor * gc
                        heapq.heappush(heap, (_heap_key(nt), nt))
                break
        else:
            remainder[t] = c
    return Polynomial._from_clean(f.n, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic-monic S-polynomial."""
    if not f or not g:
        raise DomainError("S-polynomial of the zero polynomial")
    lcm = f.leading_term.lcm(g.leading_term)
    left = f.shift(lcm.quotient(f.leading_term), 1 / f.leading_coefficient)
    right = g.shift(lcm.quotient(g.leading_term), 1 / g.leading_coefficient)
    return left - right


def interreduce(polys: Iterable[Polynomial]) -> List[Polynomial]:
    """Minimal, monic, tail-reduced version of a Groebner basis; sorted by leading term."""
    candidates = sorted(
        (p.monic() for p in polys if p), key=lambda p: degrevlex_key(p.leading_term)
    )
    minimal: List[Polynomial] = []
    for p in candidates:
        if not any(q.leading_term.divides(p.leading_term) for q in minimal):
            minimal.append(p)
    reduced = []
    for k, p in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        reduced.append(normal_form(p, others).monic())
    return reduced


class _BuchbergerRun:
    def __init__(self, generators: Sequence[Polynomial], tie_break: str = "degrevlex"):
        self.n = require_homogeneous(generators)
        self.d = max(f.degree for f in generators)
        self.tie_break = tie_break
        self.inputs: Dict[int, List[Polynomial]] = {}
        for f in generators:
            self.inputs.setdefault(f.degree, []).append(f.monic())
        self.basis: List[Polynomial] = []
        self.pairs: Dict[Tuple[int, int], Term] = {}
        self.trace = BuchbergerTrace()

    def next_degree(self) -> Optional[int]:
        degrees = [lcm.degree for lcm in self.pairs.values()] + list(self.inputs)
        return min(degrees, default=None)

    def basis_degree(self) -> int:
        return max((g.degree for g in self.basis), default=0)

    def _chain_skip(self, i: int, j: int, lcm: Term) -> bool:
        for k, g in enumerate(self.basis):
            if k in (i, j) or not g.leading_term.divides(lcm):
                continue
            if (min(i, k), max(i, k)) not in self.pairs and (min(j, k), max(j, k)) not in self.pairs:
                return True
        return False

    def _add(self, h: Polynomial, log: DegreeLog):
        if not h:
            return
        h = h.monic()
        new = len(self.basis)
        self.basis.append(h)
        for i, g in enumerate(self.basis[:-1]):
            self.pairs[(i, new)] = g.leading_term.lcm(h.leading_term)
        log.new += 1

    def process_degree(self, s: int) -> DegreeLog:
        log = DegreeLog()
        for f in self.inputs.pop(s, []):
            log.inputs += 1
            self._add(normal_form(f, self.basis), log)
        todo = sorted(
            (pair for pair, lcm in self.pairs.items() if lcm.degree == s),
            key=lambda pair: (degrevlex_key(self.pairs[pair]), pair),
            reverse=self.tie_break == "reverse",
        )
        for pair in todo:
            lcm = self.pairs.pop(pair)
            i, j = pair
            f, g = self.basis[i], self.basis[j]
            if f.leading_term.gcd(g.leading_term).is_one() or self._chain_skip(i, j, lcm):
                log.skipped += 1
                continue
            log.pairs += 1
            self._add(normal_form(s_polynomial(f, g), self.basis), log)
        self.trace.degrees[s] = log
        logger.info(f"Degree {s}: {log.pairs} pairs reduced, {log.new} new generators")
        return log

    def partial(self) -> "GroebnerBasis":
        return GroebnerBasis(self.n, tuple(interreduce(self.basis)), reduced=False)

    def leading_ideal_is_strongly_stable(self) -> bool:
        return is_strongly_stable(leading_ideal(self.basis, self.n))


def buchberger(
    generators: Sequence[Polynomial],
    early_stop_if_stable: bool = False,
    degree_cap: Optional[int] = None,
    tie_break: str = "degrevlex",
) -> Tuple[GroebnerBasis, BuchbergerTrace]:
    """Reduced Groebner basis of a homogeneous ideal plus the per-degree trace."""
    cap = settings.STABLEGB_DEGREE_CAP if degree_cap is None else degree_cap
    run = _BuchbergerRun(generators, tie_break)
    while True:
        s = run.next_degree()
        if s is None:
            break
        if early_stop_if_stable and not run.inputs and run.pairs:
            top = max(run.d, run.basis_degree())
            if s > top + 1 and run.leading_ideal_is_strongly_stable():
                # degree top+1 is empty: crystallisation ends the computation
                run.trace.degrees[top + 1] = DegreeLog()
                run.trace.early_stop_degree = top + 1
                logger.info(f"Early stop before degree {s}: nothing in degree {top + 1}")
                break
        if s > cap:
            raise CappedResultError(
                f"Buchberger reached degree {s} above the cap {cap}", cap, run.partial()
            )
        log = run.process_degree(s)
        if (
            early_stop_if_stable
            and log.new == 0
            and s > run.d
            and not run.inputs
            and run.pairs
            and run.leading_ideal_is_strongly_stable()
        ):
            run.trace.early_stop_degree = s
            logger.info(f"Early stop at degree {s} with {len(run.pairs)} pairs left")
            break
    basis = GroebnerBasis(run.n, tuple(interreduce(run.basis)), reduced=True)
    return basis, run.trace


def max_gb_degree(generators: Sequence[Polynomial]) -> int:
    """deg(I, <): the maximal degree of the reduced Groebner basis."""
    basis, _ = buchberger(generators)
    return basis.max_degree


def truncated_gb(generators: Sequence[Polynomial], t: int) -> TruncatedBasis:
    """
    G_t: Buchberger run on the generators of degree <= t, with every pair of degree <= t
    treated. `certified` is set when every S-polynomial of degree t+1 reduces to zero,
    which (for an ideal in strongly stable position) makes G_t a Groebner basis of <I_{<=t}>.
    """
    low = [f for f in generators if f.degree <= t]
    if not low:
        return TruncatedBasis(t, (), True)
    run = _BuchbergerRun(low)
    while True:
        s = run.next_degree()
        if s is None or s > t:
            break
        run.process_degree(s)
    certified = all(
        not normal_form(s_polynomial(run.basis[i], run.basis[j]), run.basis)
        for (i, j), lcm in run.pairs.items()
        if lcm.degree == t + 1
    )
    return TruncatedBasis(t, tuple(interreduce(run.basis)), certified)


def affine_basis(generators: Sequence[Polynomial]) -> GroebnerBasis:
    """
    Reduced degrevlex basis of a possibly non-homogeneous ideal: homogenize with a new
    smallest variable, run the homogeneous algorithm, dehomogenize, interreduce.
    """
    if not generators:
        raise DomainError("an ideal needs at least one generator")
    n = generators[0].n
    homogeneous = [homogenize(f) for f in generators]
    basis, _ = buchberger(homogeneous)
    return GroebnerBasis(n, tuple(interreduce(dehomogenize(g) for g in basis.generators)))


def cached_buchberger(ring: RingContext, generators: Sequence[Polynomial]) -> GroebnerBasis:
    request_hash = cache.compute_hash(format_ideal(ring, generators))
    cached = cache.get_cached_basis(request_hash)
    if cached is not None:
        logger.info(f"Cache hit for {request_hash}")
        return GroebnerBasis(ring.n, tuple(parse_polynomial(text, ring) for text in cached))
    basis, _ = buchberger(generators)
    cache.cache_basis(request_hash, ring, basis.generators)
    return basis


# --- degreewise linear algebra ---------------------------------------------------


def _degree_piece_rows(generators: Sequence[Polynomial], s: int) -> List[Polynomial]:
    n = generators[0].n
    rows = []
    for f in generators:
        if 0 <= f.degree <= s:
            rows.extend(f.shift(m) for m in terms_of_degree(n, s - f.degree))
    return rows


def _matrix(rows: Sequence[Polynomial], columns: Sequence[Term]) -> DomainMatrix:
    index = {t: k for k, t in enumerate(columns)}
    entries = []
    for row in rows:
        dense = [QQ(0)] * len(columns)
        for t, c in row:
            dense[index[t]] = QQ(c.numerator, c.denominator)
        entries.append(dense)
    return DomainMatrix(entries, (len(rows), len(columns)), QQ)


def hilbert_function_by_rank(generators: Sequence[Polynomial], s: int) -> int:
    """dim_k (P/I)_s computed from the rank of the degree-s piece of I."""
    n = generators[0].n
    columns = terms_of_degree(n, s)
    rows = _degree_piece_rows(generators, s)
    rank = _matrix(rows, columns).rank() if rows else 0
    return len(columns) - rank


def membership_by_rank(generators: Sequence[Polynomial], f: Polynomial) -> bool:
    """Ideal membership of a homogeneous f by comparing ranks in degree deg(f)."""
    if not f:
        return True
    s = f.degree
    columns = terms_of_degree(f.n, s)
    rows = _degree_piece_rows(generators, s)
    before = _matrix(rows, columns).rank() if rows else 0
    return _matrix(rows + [f], columns).rank() == before


def degree_piece_leading_terms(generators: Sequence[Polynomial], s: int) -> Set[Term]:
    """LT(I)_s read off the pivots of the echelon form with columns in descending order."""
    n = generators[0].n
    columns = terms_of_degree(n, s)
    rows = _degree_piece_rows(generators, s)
    if not rows:
        return set()
    _, pivots = _matrix(rows, columns).rref()
    return {columns[k] for k in pivots}
