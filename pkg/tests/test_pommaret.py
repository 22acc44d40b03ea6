import numpy as np
from django.test import SimpleTestCase

from apps.algebra.exceptions import DomainError
from apps.algebra.groebner import buchberger
from apps.algebra.pommaret import (
    NotQuasiStable,
    PommaretBasis,
    check_cone_decomposition,
    cls,
    depth_from_pommaret,
    involutive_normal_form,
    involutive_representation,
    monomial_pommaret_basis,
    pommaret_completion,
    pommaret_divides,
    reg_from_pommaret,
    restrict_basis,
)
from apps.algebra.ring import Polynomial, Term, default_ring, format_term, parse_polynomial
from apps.algebra.stability import leading_ideal, minimal_generators

from . import oracles


def ideal(n, *texts):
    ring = default_ring(n)
    return [parse_polynomial(t, ring) for t in texts]


def lt_names(H, n):
    return sorted(format_term(t, default_ring(n)) for t in H.leading_terms)


class DivisionTests(SimpleTestCase):
    def test_class(self):
        self.assertEqual(cls(Term((1, 0, 1))), 3)
        self.assertEqual(cls(Term((2, 1, 0))), 2)
        with self.assertRaises(DomainError):
            cls(Term((0, 0, 0)))

    def test_pommaret_divides(self):
        x2 = Term((0, 1, 0))
        self.assertTrue(pommaret_divides(x2, Term((0, 2, 3))))
        self.assertFalse(pommaret_divides(x2, Term((1, 1, 0))))
        self.assertFalse(pommaret_divides(x2, Term((1, 0, 0))))


class CompletionTests(SimpleTestCase):
    def test_stable_ideal_keeps_its_reduced_basis(self):
        G, _ = buchberger(ideal(3, "x1*x3", "x1*x2 + x2^2", "x1^2"))
        H = pommaret_completion(G)
        self.assertIsInstance(H, PommaretBasis)
        self.assertEqual(set(H.polynomials), set(G.generators))
        self.assertEqual((reg_from_pommaret(H), depth_from_pommaret(H)), (3, 0))

    def test_quasi_stable_monomial_ideal(self):
        G, _ = buchberger(ideal(2, "x1^4", "x1^2*x2"))
        H = pommaret_completion(G)
        self.assertEqual(lt_names(H, 2), sorted(["x1^4", "x1^2*x2", "x1^3*x2"]))
        self.assertEqual(reg_from_pommaret(H), 4)
        self.assertTrue(check_cone_decomposition(H))

    def test_not_quasi_stable(self):
        G, _ = buchberger(ideal(2, "x1*x2"))
        H = pommaret_completion(G)
        self.assertIsInstance(H, NotQuasiStable)
        self.assertFalse(H.cap_reached)
        self.assertEqual((H.obstruction.i, H.obstruction.j), (2, 1))

    def test_degree_cap(self):
        G, _ = buchberger(ideal(2, "x1^9", "x1*x2"))
        H = pommaret_completion(G, degree_cap=4)
        self.assertIsInstance(H, NotQuasiStable)
        self.assertTrue(H.cap_reached)

    def test_generated_by_leading_terms(self):
        G, _ = buchberger(ideal(3, "x1^2 + x2*x3", "x2^2 - x1*x3"))
        H = pommaret_completion(G)
        self.assertIsInstance(H, PommaretBasis)
        self.assertEqual(minimal_generators(H.leading_terms, 3), leading_ideal(G.generators, 3))
        self.assertTrue(check_cone_decomposition(H))


class RepresentationTests(SimpleTestCase):
    def test_members_reduce_to_zero(self):
        gens = ideal(3, "x1^2 + x2*x3", "x2^2 - x1*x3")
        H = pommaret_completion(buchberger(gens)[0])
        f = gens[0] * parse_polynomial("x1 - 2*x3", default_ring(3)) + gens[1] * parse_polynomial("x2", default_ring(3))
        multipliers, remainder = involutive_representation(f, H)
        self.assertFalse(remainder)
        rebuilt = Polynomial.zero(3)
        for k, q in multipliers.items():
            element = H.elements[k]
            for t in q.terms():
                self.assertTrue(all(t[i] == 0 for i in range(element.cls - 1)))
            rebuilt = rebuilt + q * element.polynomial
        self.assertEqual(rebuilt, f)

    def test_standard_terms_survive(self):
        H = monomial_pommaret_basis(leading_ideal(ideal(2, "x1^2", "x1*x2", "x2^3"), 2))
        f = Polynomial.monomial(Term((0, 2)))
        self.assertEqual(involutive_normal_form(f, H), f)


class RestrictionTests(SimpleTestCase):
    def test_restrict_by_depth(self):
        H = monomial_pommaret_basis(leading_ideal(ideal(3, "x1^2", "x1*x2", "x2^2"), 3))
        self.assertEqual(depth_from_pommaret(H), 1)
        lower = restrict_basis(H, 1)
        self.assertEqual(lower.n, 2)
        self.assertEqual(reg_from_pommaret(lower), reg_from_pommaret(H))
        with self.assertRaises(DomainError):
            restrict_basis(H, 2)


class ConeOracleTests(SimpleTestCase):
    def test_cones_count_the_ideal(self):
        rng = np.random.default_rng(13)
        for _ in range(12):
            n = int(rng.integers(2, 4))
            seed = oracles.random_monomial_ideal(rng, n, 3, 2)
            J = oracles.borel_closure(n, seed.min_gens)
            H = monomial_pommaret_basis(J)
            self.assertTrue(check_cone_decomposition(H))
            for s in range(H.max_degree + 4):
                self.assertEqual(oracles.cone_count(n, H.leading_terms, s), oracles.ideal_count(J, s))

    def test_non_quasi_stable_monomial_ideal(self):
        with self.assertRaises(DomainError):
            monomial_pommaret_basis(minimal_generators([Term((1, 1))], 2))
