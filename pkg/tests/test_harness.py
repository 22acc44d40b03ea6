from django.test import SimpleTestCase, tag

from apps.algebra.exceptions import UsageError
from apps.algebra.ring import default_ring, parse_polynomial
from apps.harness.corpus import CorpusMember, generate_corpus, validate_spec
from apps.harness.fixtures import counterexample_fixture, run_fixtures
from apps.harness.schemas import FAIL, PASS, CorpusSpec, TheoremCheck, VerificationReport
from apps.harness.serializers import VerificationReportSerializer
from apps.harness.tasks import verify_member_task
from apps.harness.verify import exercised_dimensions, verify_affine, verify_corpus, verify_theorems


def ideal(n, *texts):
    ring = default_ring(n)
    return ring, [parse_polynomial(t, ring) for t in texts]


def by_name(report, theorem):
    return next(c for c in report.checks if c.theorem == theorem)


class VerifyTests(SimpleTestCase):
    def test_green(self):
        report = verify_theorems(*ideal(3, "x1*x3", "x1*x2 + x2^2", "x1^2"))
        self.assertEqual(report.status, PASS, report.reasons)
        self.assertTrue(report.position["strongly_stable"])
        self.assertEqual(
            {k: report.quantities[k] for k in ("deg", "reg", "dim", "depth", "hilb")},
            {"deg": 3, "reg": 3, "dim": 1, "depth": 0, "hilb": 3},
        )
        self.assertTrue(by_name(report, "degree_eq_reg_le_hs_C").holds)
        self.assertFalse(by_name(report, "zero_dim_degree_sum").applicable)

    def test_reg_matches_gin_generator_degree(self):
        for texts, n, reg in ((("x1*x3", "x1*x2 + x2^2", "x1^2"), 3, 3), (("x1*x2",), 2, 2)):
            report = verify_theorems(*ideal(n, *texts))
            check = by_name(report, "reg_eq_gin_generator_degree")
            self.assertEqual((check.lhs, check.rhs, check.holds), (reg, reg, True), texts)
            self.assertEqual(report.quantities["reg"], reg)

    def test_two_variable_example(self):
        report = verify_theorems(*ideal(2, "x1^2", "x1*x2 + x2^2"))
        self.assertEqual(report.status, PASS, report.reasons)
        check = by_name(report, "degree_le_hs_A")
        self.assertEqual((check.lhs, check.rhs, check.holds), (3, "4", True))
        self.assertEqual(report.quantities["F_size"], 4)
        self.assertTrue(by_name(report, "zero_dim_standard_count").holds)

    def test_not_quasi_stable(self):
        report = verify_theorems(*ideal(2, "x1*x2"))
        self.assertEqual(report.status, PASS, report.reasons)
        self.assertFalse(report.position["quasi_stable"])
        lazard = by_name(report, "lazard_degree")
        self.assertFalse(lazard.applicable)
        self.assertIn("quasi stable", lazard.reason)
        self.assertFalse(by_name(report, "pommaret_cone_decomposition").applicable)
        self.assertEqual((report.quantities["reg"], report.quantities["depth"]), (2, 1))

    def test_mora_remark_ideal(self):
        report = verify_theorems(*ideal(2, "x1^2", "x1*x2^11"))
        self.assertEqual(report.status, PASS, report.reasons)
        self.assertEqual(by_name(report, "mora_lemma_a").rhs, 14)
        self.assertEqual(by_name(report, "mora_lemma_b").rhs, 144)

    def test_depth_refined_fset_clause_is_reported(self):
        # D = 2, depth 1: #F(I) = 9 and #F(I~) = 5 both exceed 3^{(3-2)2^0}
        report = verify_theorems(*ideal(3, "x1^2", "x1*x2^2"))
        self.assertEqual(report.status, PASS, report.reasons)
        self.assertEqual((report.quantities["dim"], report.quantities["depth"]), (2, 1))
        clause = by_name(report, "fset_le_bound_depth")
        self.assertFalse(clause.gating)
        self.assertEqual((clause.lhs, clause.rhs, clause.holds), (9, "3", False))
        self.assertEqual(clause.witness["restricted_F_size"], 5)
        self.assertFalse(clause.witness["restricted_holds"])
        self.assertNotIn(clause, report.failed_checks())
        restricted = by_name(report, "restricted_fset_le_bound")
        self.assertTrue(restricted.gating)
        self.assertEqual((restricted.lhs, restricted.rhs, restricted.holds), (5, "9", True))

    def test_affine(self):
        report = verify_affine(*ideal(2, "x1^2 - x2", "x2^2 - x1"))
        self.assertEqual(report.status, PASS, report.reasons)
        self.assertEqual(report.quantities["deg"], 2)
        self.assertEqual(report.quantities["lifted_depth"], 1)
        self.assertTrue(by_name(report, "lazard_affine_degree").holds)

    def test_report_survives_serialization(self):
        report = verify_theorems(*ideal(2, "x1^2", "x1*x2 + x2^2"))
        back = VerificationReportSerializer.to_report(VerificationReportSerializer(report).data)
        self.assertEqual((back.ideal_id, back.status, back.n), (report.ideal_id, report.status, 2))
        self.assertEqual([c.theorem for c in back.checks], [c.theorem for c in report.checks])
        self.assertEqual(back.failed_checks(), [])


class FixtureTests(SimpleTestCase):
    def test_all_fixtures_pass(self):
        for outcome in run_fixtures():
            bad = [(e.label, e.expected, e.actual) for e in outcome.expectations if not e.ok]
            self.assertEqual(bad, [], outcome.name)

    def test_counterexample_t2_meets_degree_sum(self):
        outcome = counterexample_fixture(2)
        labels = [e.label for e in outcome.expectations]
        self.assertNotIn("degree exceeds degree sum", labels)
        self.assertEqual(outcome.status, PASS)
        self.assertTrue(all(e.ok for e in outcome.expectations))


class CorpusTests(SimpleTestCase):
    spec = CorpusSpec(n_max=3, d_max=2, k_max=3, count=4, seed=1)

    def test_deterministic(self):
        first = [m.to_payload() for m in generate_corpus(self.spec)]
        second = [m.to_payload() for m in generate_corpus(self.spec)]
        self.assertEqual(first, second)
        self.assertEqual([p["target"] for p in first], ["strong", "quasi", "strong", "quasi"])

    def test_payload_round_trip(self):
        member = generate_corpus(self.spec)[0]
        self.assertEqual(CorpusMember.from_payload(member.to_payload()), member)

    def test_bad_spec(self):
        with self.assertRaises(UsageError):
            validate_spec(CorpusSpec(count=-1))
        with self.assertRaises(UsageError):
            validate_spec(CorpusSpec(n_min=3, n_max=2))

    def test_task(self):
        payload = generate_corpus(self.spec)[1].to_payload()
        data = verify_member_task.apply(args=[payload, 0]).get()
        self.assertEqual(data["ideal_id"], "corpus-0001")
        self.assertEqual(data["metadata"]["index"], 1)
        self.assertEqual(data["metadata"]["target"], "quasi")

    def test_corpus_has_no_failures(self):
        reports = verify_corpus(self.spec)
        self.assertEqual([r.ideal_id for r in reports], [f"corpus-{i:04d}" for i in range(4)])
        self.assertFalse([r.reasons for r in reports if r.status == FAIL])

    @tag("slow")
    def test_default_corpus_has_no_failures(self):
        reports = verify_corpus(CorpusSpec(), seed=0)
        self.assertEqual(len(reports), 200)
        self.assertEqual([(r.ideal_id, r.reasons) for r in reports if r.status == FAIL], [])
        noted = [c for r in reports for c in r.checks if not c.gating and c.applicable and not c.holds]
        self.assertTrue(all(c.theorem == "fset_le_bound_depth" for c in noted))


class ExercisedDimensionTests(SimpleTestCase):
    def test_collects_applicable_witnesses(self):
        reports = [
            VerificationReport("a", PASS, checks=[TheoremCheck("degree_le_hs_A", True, True, witness={"D": 1})]),
            VerificationReport(
                "b",
                PASS,
                checks=[
                    TheoremCheck("degree_le_hs_A", True, True, witness={"D": 0}),
                    TheoremCheck("degree_le_hs_C", False, reason="needs D >= 1"),
                ],
            ),
        ]
        self.assertEqual(exercised_dimensions(reports), {"degree_le_hs_A": [0, 1]})
