from fractions import Fraction

from django.test import SimpleTestCase

from apps.algebra.exceptions import DomainError, ParseError, UsageError
from apps.algebra.ring import (
    LinearChange,
    Ordering,
    Polynomial,
    RingContext,
    Term,
    apply_linear_change,
    default_ring,
    degrevlex_cmp,
    dehomogenize,
    format_polynomial,
    homogenize,
    leading_data,
    parse_ideal,
    parse_polynomial,
    terms_of_degree,
)


def P(text, n=3):
    return parse_polynomial(text, default_ring(n))


class OrderingTests(SimpleTestCase):
    def test_degrevlex(self):
        self.assertEqual(degrevlex_cmp(Term((1, 0, 1)), Term((0, 2, 0))), Ordering.LESS)
        self.assertEqual(degrevlex_cmp(Term((2, 0, 0)), Term((1, 1, 0))), Ordering.GREATER)
        self.assertEqual(degrevlex_cmp(Term((0, 0, 3)), Term((1, 0, 0))), Ordering.GREATER)
        self.assertEqual(degrevlex_cmp(Term((1, 1)), Term((1, 1))), Ordering.EQUAL)

    def test_arity_mismatch(self):
        with self.assertRaises(UsageError):
            degrevlex_cmp(Term((1, 0)), Term((1, 0, 0)))

    def test_terms_of_degree_descending(self):
        terms = terms_of_degree(3, 2)
        self.assertEqual(len(terms), 6)
        self.assertEqual(terms[0], Term((2, 0, 0)))
        self.assertEqual(terms[-1], Term((0, 0, 2)))
        for a, b in zip(terms, terms[1:]):
            self.assertEqual(degrevlex_cmp(a, b), Ordering.GREATER)


class PolynomialTests(SimpleTestCase):
    def test_leading_data(self):
        f = P("x2^2 + 3*x1*x3")
        lead = leading_data(f)
        self.assertEqual(lead.term, Term((0, 2, 0)))
        self.assertEqual(lead.coefficient, 1)
        with self.assertRaises(DomainError):
            leading_data(Polynomial.zero(3))

    def test_arithmetic(self):
        f, g = P("x1 + x2"), P("x1 - x2")
        self.assertEqual(f * g, P("x1^2 - x2^2"))
        self.assertEqual(f + g, P("2*x1"))
        self.assertFalse(f - f)
        self.assertEqual(f ** 2, P("x1^2 + 2*x1*x2 + x2^2"))
        self.assertEqual(P("2*x1 + 4*x2").monic(), P("x1 + 2*x2"))

    def test_arity_mismatch(self):
        with self.assertRaises(UsageError):
            P("x1", 2) + P("x1", 3)

    def test_rational_coefficients(self):
        f = P("1/2*x1 - 3/4*x3")
        self.assertEqual(f.coefficient(Term((0, 0, 1))), Fraction(-3, 4))
        self.assertEqual(format_polynomial(f), "1/2*x1 - 3/4*x3")


class LinearChangeTests(SimpleTestCase):
    def test_swap(self):
        swap = LinearChange(((0, 1), (1, 0)))
        self.assertEqual(apply_linear_change(swap, P("x1^2 + x1*x2", 2)), P("x2^2 + x1*x2", 2))

    def test_identity_and_inverse(self):
        A = LinearChange(((1, 2), (3, 5)))
        f = P("x1^3 - x1*x2^2 + 7*x2^3", 2)
        self.assertEqual(apply_linear_change(A.inverse(), apply_linear_change(A, f)), f)
        self.assertEqual(apply_linear_change(LinearChange.identity(2), f), f)

    def test_singular(self):
        with self.assertRaises(DomainError):
            LinearChange(((1, 2), (2, 4)))


class HomogenizationTests(SimpleTestCase):
    def test_round_trip(self):
        f = P("x1^2 - x2", 2)
        h = homogenize(f)
        self.assertEqual(h, P("x1^2 - x2*x3", 3))
        self.assertTrue(h.is_homogeneous())
        self.assertEqual(dehomogenize(h), f)


class ParserTests(SimpleTestCase):
    def test_parse_ideal(self):
        ring, gens = parse_ideal("ring: x y z\n# comment\nx*z\nx*y + y^2\nx^2\n")
        self.assertEqual(ring.names, ("x", "y", "z"))
        self.assertEqual(len(gens), 3)
        self.assertEqual(format_polynomial(gens[1], ring), "x*y + y^2")

    def test_error_positions(self):
        with self.assertRaises(ParseError) as ctx:
            parse_ideal("ring: x1 x2\nx1 + x3\n")
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 6))
        with self.assertRaises(ParseError):
            parse_ideal("x1 + x2\n")
        with self.assertRaises(ParseError):
            parse_ideal("ring: x1\nx1 - x1\n")

    def test_ring_names(self):
        with self.assertRaises(UsageError):
            RingContext(2, ("x", "x"))
