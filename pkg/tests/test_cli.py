import json
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from io import StringIO
from pathlib import Path

from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from stablegb.cli import main

IDEALS = Path(settings.BASE_DIR) / "data" / "ideals"


def run(*argv):
    out, err = StringIO(), StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class DispatchTests(SimpleTestCase):
    def test_no_subcommand(self):
        code, _, err = run()
        self.assertEqual(code, 2)
        self.assertIn("usage: stablegb", err)

    def test_unknown_subcommand(self):
        code, _, err = run("groebner")
        self.assertEqual(code, 2)
        self.assertIn("unknown subcommand", err)

    def test_help(self):
        self.assertEqual(run("--help")[0], 0)


class ExitCodeTests(SimpleTestCase):
    def test_missing_file(self):
        self.assertEqual(run("gb", str(IDEALS / "missing.ideal"))[0], 2)

    def test_parse_error(self):
        with tempfile.NamedTemporaryFile("w", suffix=".ideal", delete=False) as handle:
            handle.write("ring: x1 x2\nx1 + x3\n")
        try:
            code, _, err = run("gb", handle.name)
        finally:
            Path(handle.name).unlink()
        self.assertEqual(code, 2)
        self.assertIn("line 2", err)

    def test_degree_cap(self):
        code, _, _ = run("gb", str(IDEALS / "counterexample_t4.ideal"), "--degree-cap", "10")
        self.assertEqual(code, 3)

    def test_bound_out_of_range(self):
        self.assertEqual(run("bounds", "--n", "3", "--d", "2", "--dim", "3")[0], 2)

    def test_fixtures_pass(self):
        code, out, _ = run("fixtures")
        self.assertEqual(code, 0)
        self.assertIn("green: PASS", out)


class OutputTests(SimpleTestCase):
    def test_bounds_table(self):
        out = StringIO()
        call_command("bounds", n=5, d=3, dim=4, stdout=out)
        self.assertIn("13122", out.getvalue())
        self.assertIn("390625", out.getvalue())

    def test_bounds_remarks_json(self):
        out = StringIO()
        call_command("bounds", n=3, d=5, dim=2, remarks=True, json=True, stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(len(data["remarks"]), 6)
        self.assertEqual(data["remarks"][0]["computed"], "<")
        self.assertTrue(data["remarks"][0]["discrepancy"])

    def test_gb_json_is_stable(self):
        outputs = []
        for _ in range(2):
            out = StringIO()
            call_command("gb", str(IDEALS / "green.ideal"), json=True, stdout=out)
            outputs.append(out.getvalue())
        self.assertEqual(outputs[0], outputs[1])
        data = json.loads(outputs[0])
        self.assertEqual(data["max_degree"], 3)
        self.assertEqual(sorted(data["lt_ideal"]), sorted(["x1*x3", "x1*x2", "x1^2", "x2^2*x3", "x2^3"]))
        self.assertIsNone(data["truncate"])

    def test_gb_truncate(self):
        path = str(IDEALS / "green.ideal")
        out = StringIO()
        call_command("gb", path, json=True, truncate=2, stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual((data["truncate"], data["certified"], data["max_degree"]), (2, False, 2))
        self.assertEqual(sorted(data["lt_ideal"]), sorted(["x1*x3", "x1*x2", "x1^2"]))
        out = StringIO()
        call_command("gb", path, json=True, truncate=3, stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual((data["truncate"], data["certified"], data["max_degree"]), (3, True, 3))
        self.assertEqual(len(data["lt_ideal"]), 5)
        code, _, err = run("gb", path, "--truncate", "2", "--early-stop")
        self.assertEqual(code, 2)
        self.assertIn("--truncate", err)

    def test_invariants_json_keys(self):
        out = StringIO()
        call_command("invariants", str(IDEALS / "green.ideal"), json=True, hf_to=5, stdout=out)
        data = json.loads(out.getvalue())
        self.assertLessEqual({"dimension", "depth", "reg", "hilb", "hs_numerator", "hf_table"}, set(data))
        self.assertEqual(data["hf_table"], {"0": 1, "1": 3, "2": 3, "3": 2, "4": 2, "5": 2})
        self.assertEqual((data["dimension"], data["depth"], data["reg"], data["hilb"]), (1, 0, 3, 3))
        self.assertEqual(data["hs_numerator"], [1, 2, 0, -1])

    def test_pommaret_obstruction(self):
        with tempfile.NamedTemporaryFile("w", suffix=".ideal", delete=False) as handle:
            handle.write("ring: x y\nx*y\n")
        try:
            out = StringIO()
            call_command("pommaret", handle.name, json=True, stdout=out)
        finally:
            Path(handle.name).unlink()
        data = json.loads(out.getvalue())
        self.assertFalse(data["quasi_stable"])
        self.assertIsNotNone(data["obstruction"])

    def test_verify_ideal(self):
        out = StringIO()
        call_command("verify", str(IDEALS / "two_variable.ideal"), json=True, stdout=out)
        data = json.loads(out.getvalue())
        self.assertEqual(data["status"], "PASS")
        self.assertEqual(data["quantities"]["F_size"], 4)

    def test_verify_needs_input(self):
        with self.assertRaises(CommandError):
            call_command("verify", stdout=StringIO())
