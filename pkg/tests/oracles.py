"""Definition-level oracles. Slow, direct, and independent of the library shortcuts."""
from math import comb

import numpy as np

from apps.algebra.ring import Polynomial, Term, terms_of_degree
from apps.algebra.stability import MonomialIdeal, minimal_generators


def terms_in(J: MonomialIdeal, top: int):
    for s in range(top + 1):
        for m in terms_of_degree(J.n, s):
            if J.contains(m):
                yield m


def _moved(m: Term, j: int, i: int, t: int = 1, s: int = 1) -> Term:
    exps = list(m)
    exps[j] += t
    exps[i] -= s
    return Term(exps)


def brute_strongly_stable(J: MonomialIdeal, top: int) -> bool:
    """x_j m / x_i in J for every m in J, every x_i | m and every j < i."""
    return all(
        J.contains(_moved(m, j, i))
        for m in terms_in(J, top)
        for i in range(J.n)
        if m[i]
        for j in range(i)
    )


def brute_stable(J: MonomialIdeal, top: int) -> bool:
    """Same exchange, but only for the last variable occurring in m."""
    for m in terms_in(J, top):
        if m.is_one():
            continue
        i = max(k for k in range(J.n) if m[k])
        if not all(J.contains(_moved(m, j, i)) for j in range(i)):
            return False
    return True


def brute_quasi_stable(J: MonomialIdeal, top: int) -> bool:
    """For x_i^s || m and j < i some x_j^t m / x_i^s lies in J."""
    for m in terms_in(J, top):
        for i in range(J.n):
            s = m[i]
            if not s:
                continue
            for j in range(i):
                if not any(J.contains(_moved(m, j, i, t, s)) for t in range(2 * top + 1)):
                    return False
    return True


def brute_hilbert_function(J: MonomialIdeal, s: int) -> int:
    return sum(1 for m in terms_of_degree(J.n, s) if not J.contains(m))


def cone_count(n: int, leading_terms, s: int) -> int:
    """Terms of degree s in the Pommaret cones: a cone of class c has n - c + 1 free variables."""
    total = 0
    for t in leading_terms:
        c = max(k for k in range(n) if t[k]) + 1
        free = n - c + 1
        if s >= t.degree:
            total += comb(s - t.degree + free - 1, free - 1)
    return total


def ideal_count(J: MonomialIdeal, s: int) -> int:
    return comb(s + J.n - 1, J.n - 1) - brute_hilbert_function(J, s)


def random_monomial_ideal(rng: np.random.Generator, n: int, max_degree: int, count: int) -> MonomialIdeal:
    terms = []
    for _ in range(count):
        degree = int(rng.integers(1, max_degree + 1))
        pool = terms_of_degree(n, degree)
        terms.append(pool[int(rng.integers(0, len(pool)))])
    return minimal_generators(terms, n)


def borel_closure(n: int, generators) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given terms."""
    seen = set()
    frontier = [Term(g) for g in generators]
    while frontier:
        m = frontier.pop()
        if m in seen:
            continue
        seen.add(m)
        for i in range(n):
            if m[i]:
                for j in range(i):
                    frontier.append(_moved(m, j, i))
    return minimal_generators(seen, n)


def random_form(rng: np.random.Generator, n: int, degree: int, size: int = 3) -> Polynomial:
    pool = terms_of_degree(n, degree)
    picks = rng.choice(len(pool), size=min(size, len(pool)), replace=False)
    return Polynomial(n, {pool[int(k)]: int(rng.integers(1, 6)) * (1 if k % 2 else -1) for k in picks})
