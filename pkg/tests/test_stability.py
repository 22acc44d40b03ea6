import numpy as np
from django.test import SimpleTestCase

from apps.algebra.exceptions import DomainError, UsageError
from apps.algebra.ring import Term, default_ring, format_term, parse_polynomial
from apps.algebra.stability import (
    MonomialIdeal,
    cp_gap_check,
    deg_i,
    dimension,
    has_pure_power,
    is_noether_position,
    is_quasi_stable,
    is_stable,
    is_strongly_stable,
    minimal_generators,
    quasi_stability_obstruction,
    restrict_last,
)

from . import oracles


def monomials(n, *texts):
    ring = default_ring(n)
    return minimal_generators([parse_polynomial(t, ring).leading_term for t in texts], n)


GREEN_LT = ("x1*x3", "x1*x2", "x1^2", "x2^2*x3", "x2^3")


class MinimalGeneratorTests(SimpleTestCase):
    def test_redundant_terms_dropped(self):
        J = monomials(2, "x1^2", "x1^2*x2", "x1*x2", "x1^3")
        self.assertEqual(set(J.min_gens), {Term((2, 0)), Term((1, 1))})
        self.assertTrue(J.contains(Term((5, 7))))
        self.assertFalse(J.contains(Term((0, 7))))

    def test_empty_needs_arity(self):
        with self.assertRaises(UsageError):
            minimal_generators([])
        self.assertTrue(minimal_generators([], 3).is_zero())


class PredicateTests(SimpleTestCase):
    def test_green_leading_ideal(self):
        J = monomials(3, *GREEN_LT)
        self.assertTrue(is_strongly_stable(J))
        self.assertTrue(is_stable(J))
        self.assertTrue(is_quasi_stable(J))

    def test_stable_but_not_strongly_stable(self):
        J = monomials(3, "x2*x3", "x1*x2", "x2^2", "x1^2")
        self.assertTrue(is_stable(J))
        self.assertFalse(is_strongly_stable(J))
        self.assertTrue(is_quasi_stable(J))
        self.assertFalse(oracles.brute_strongly_stable(J, 4))
        self.assertTrue(oracles.brute_stable(J, 4))

    def test_obstruction(self):
        J = monomials(2, "x1*x2")
        self.assertFalse(is_quasi_stable(J))
        o = quasi_stability_obstruction(J)
        self.assertEqual((o.generator, o.i, o.j), (Term((1, 1)), 2, 1))

    def test_quasi_stable_not_stable(self):
        # x1^2 * x2 would need x1^3 for stability; a power of x1 is enough for quasi stability
        J = monomials(2, "x1^4", "x1^2*x2")
        self.assertFalse(is_stable(J))
        self.assertTrue(is_quasi_stable(J))

    def test_agree_with_definitions(self):
        rng = np.random.default_rng(3)
        for _ in range(40):
            n = int(rng.integers(2, 4))
            J = oracles.random_monomial_ideal(rng, n, 4, int(rng.integers(1, 5)))
            top = J.max_degree + 2
            self.assertEqual(is_strongly_stable(J), oracles.brute_strongly_stable(J, top), J)
            self.assertEqual(is_stable(J), oracles.brute_stable(J, top), J)
            self.assertEqual(is_quasi_stable(J), oracles.brute_quasi_stable(J, top), J)

    def test_borel_closures_are_strongly_stable(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            seed = oracles.random_monomial_ideal(rng, 3, 3, 2)
            J = oracles.borel_closure(3, seed.min_gens)
            self.assertTrue(is_strongly_stable(J))
            self.assertTrue(is_stable(J))
            self.assertTrue(is_quasi_stable(J))


class CombinatoricsTests(SimpleTestCase):
    def test_restrict_last(self):
        J = restrict_last(monomials(3, *GREEN_LT), 1)
        ring = default_ring(2)
        self.assertEqual(J.n, 2)
        self.assertEqual(sorted(format_term(m, ring) for m in J.min_gens), ["x1*x2", "x1^2", "x2^3"])
        with self.assertRaises(UsageError):
            restrict_last(J, 2)

    def test_deg_i(self):
        J = monomials(3, *GREEN_LT)
        self.assertEqual([deg_i(J, i) for i in (1, 2, 3)], [2, 3, 1])
        with self.assertRaises(UsageError):
            deg_i(J, 4)

    def test_dimension(self):
        self.assertEqual(dimension(monomials(2, "x1^2", "x1*x2", "x2^3")), 0)
        self.assertEqual(dimension(monomials(3, *GREEN_LT)), 1)
        self.assertEqual(dimension(monomials(3, "x1")), 2)
        with self.assertRaises(DomainError):
            dimension(MonomialIdeal(2, (Term((0, 0)),)))

    def test_noether_position(self):
        self.assertTrue(is_noether_position(monomials(3, *GREEN_LT)))
        self.assertFalse(is_noether_position(monomials(2, "x1*x2")))
        ring = default_ring(3)
        gens = [parse_polynomial(t, ring) for t in ("x1*x3", "x1*x2 + x2^2", "x1^2")]
        self.assertTrue(is_noether_position(gens))

    def test_noether_matches_quasi_stability_in_low_dimension(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            J = oracles.random_monomial_ideal(rng, 3, 3, int(rng.integers(2, 5)))
            if dimension(J) <= 1:
                self.assertEqual(is_noether_position(J), is_quasi_stable(J), J)

    def test_pure_powers(self):
        J = monomials(3, *GREEN_LT)
        self.assertTrue(has_pure_power(J, 1))
        self.assertFalse(has_pure_power(J, 3))

    def test_crystallisation_gaps(self):
        J = monomials(2, "x1^2", "x1*x2^11")
        self.assertTrue(cp_gap_check(J, 12))
        self.assertFalse(cp_gap_check(J, 2))
        self.assertTrue(cp_gap_check(monomials(2, "x1^2", "x1*x2", "x2^3"), 2))
