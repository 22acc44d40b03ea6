from django.test import SimpleTestCase

from apps.algebra.exceptions import DomainError
from apps.algebra.fset import all_standard_monomials, f_set, f_tilde_set, lemma_mora_check, standard_monomials
from apps.algebra.groebner import buchberger
from apps.algebra.ring import default_ring, format_term, parse_polynomial
from apps.algebra.stability import minimal_generators


def basis_of(n, *texts):
    ring = default_ring(n)
    return buchberger([parse_polynomial(t, ring) for t in texts])[0]


def names(terms, n):
    return sorted(format_term(t, default_ring(n)) for t in terms)


class StandardMonomialTests(SimpleTestCase):
    def test_zero_dimensional(self):
        J = minimal_generators(basis_of(2, "x1^2", "x1*x2", "x2^3").leading_terms, 2)
        self.assertEqual(names(all_standard_monomials(J), 2), sorted(["1", "x1", "x2", "x2^2"]))

    def test_truncated(self):
        J = minimal_generators(basis_of(2, "x1").leading_terms, 2)
        self.assertEqual(len(standard_monomials(J, 5)), 6)
        with self.assertRaises(DomainError):
            all_standard_monomials(J)


class FSetTests(SimpleTestCase):
    def test_zero_dimensional_is_the_standard_set(self):
        report = f_set(basis_of(2, "x1^2", "x1*x2 + x2^2"))
        self.assertEqual(report.F_size, 4)
        self.assertEqual(report.F, report.tildeF)
        self.assertEqual(len(report.levels), 1)

    def test_one_dimensional(self):
        report = f_set(basis_of(3, "x1*x3", "x1*x2 + x2^2", "x1^2"))
        self.assertEqual([level.n for level in report.levels], [3, 2])
        self.assertEqual(len(report.levels[1].F), 4)
        self.assertEqual(
            names(report.F, 3), sorted(["1", "x1", "x2", "x3", "x2^2", "x2*x3", "x3^2"])
        )
        self.assertTrue(all(t.degree < report.levels[0].degree for t in report.F))

    def test_needs_strongly_stable_leading_ideal(self):
        with self.assertRaises(DomainError):
            f_set(basis_of(2, "x1*x2"))


class MoraLemmaTests(SimpleTestCase):
    def test_remark_example(self):
        basis = basis_of(2, "x1^2", "x1*x2^11")
        check = lemma_mora_check(basis, 12)
        self.assertEqual((check.a_lhs, check.a_rhs), (12, 14))
        self.assertEqual((check.b_lhs, check.b_rhs), (23, 144))
        self.assertTrue(check.holds_a and check.holds_b)
        self.assertEqual(check.mora_a_rhs, 4)
        self.assertEqual((check.mora_b_lhs, check.mora_b_rhs), (23, 4))
        self.assertFalse(check.mora_holds_a)
        self.assertFalse(check.mora_holds_b)
        self.assertEqual(len(f_tilde_set(basis)), 23)

    def test_needs_two_variables(self):
        with self.assertRaises(DomainError):
            lemma_mora_check(basis_of(1, "x1^2"), 2)
