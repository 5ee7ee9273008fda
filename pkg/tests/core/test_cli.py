import io
import json
import tempfile
import unittest
from contextlib import redirect_stdout
from pathlib import Path
from unittest import mock

import pytest

from src.audit import VerificationLedger
from src.cli import commands
from src.contour import Family, valid_triples
from src.dualgraph import cycle_graph, read_graph_text, write_graph_text
from src.errors import InvalidSpec
from src.main import main


def run_cli(*argv):
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        code = main([str(a) for a in argv])
    return code, buffer.getvalue()


class TestCountVerb(unittest.TestCase):
    def test_count_agrees(self):
        code, out = run_cli("count", 1, 1, 1, 0)
        self.assertEqual(code, 0)
        self.assertIn("count 4 = 2^2 * 3^0", out)
        self.assertIn("agrees", out)

    def test_count_json(self):
        code, out = run_cli("count", 2, 2, 3, 1, "--json", "--counter", "brute")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["count"], "16")
        self.assertEqual(report["formula"], "16")
        self.assertEqual((report["alpha"], report["beta"]), (4, 0))
        self.assertEqual(report["counter"], "brute")
        self.assertTrue(report["agrees"])

    def test_count_weighted(self):
        code, out = run_cli("count", 1, 1, 1, 0, "--weighted")
        self.assertEqual(code, 0)
        self.assertIn("weighted ", out)

    def test_invalid_region(self):
        code, _ = run_cli("count", 1, 9, 5, 0)
        self.assertEqual(code, 2)


class TestFormulaVerb(unittest.TestCase):
    def test_values(self):
        self.assertEqual(run_cli("formula", "phi", 3, 3, 0), (0, "4096\n"))
        self.assertEqual(run_cli("formula", "w1", 1, 1, 0), (0, "x^4 + 2x^2 + 1\n"))
        self.assertEqual(run_cli("formula", "n1", 2, 2, 0), (0, "144\n"))

    def test_exponents(self):
        self.assertEqual(run_cli("formula", "phi", 3, 3, 0, "--exponents"), (0, "12 0\n"))
        self.assertEqual(run_cli("formula", "w1", 1, 1, 0, "--exponents"), (0, "0 2 0 0\n"))

    def test_hypothesis_violation(self):
        code, _ = run_cli("formula", "n1", 1, 1, 0)
        self.assertEqual(code, 2)


class TestSuitesAndSweep(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_census(self):
        self.assertEqual(run_cli("census"), (0, "F1 53\nF2 28\n"))

    def test_recurrence_suite(self):
        code, out = run_cli("identities", "--suite", "recurrences", "--grid", 2)
        self.assertEqual(code, 0)
        self.assertIn("recurrences: 1250 checks, 0 failures", out)

    def test_recurrence_suite_json_and_ledger(self):
        ledger_path = self.dir / "ledger.jsonl"
        code, out = run_cli("--ledger", ledger_path, "identities", "--suite", "recurrences", "--grid", 1, "--json")
        self.assertEqual(code, 0)
        report = json.loads(out)
        self.assertEqual(report["failures"], 0)
        ledger = VerificationLedger(ledger_path)
        self.assertEqual(len(list(ledger.entries())), 1)
        self.assertTrue(ledger.verify_chain())

    def test_sweep(self):
        report_path = self.dir / "sweep.json"
        code, out = run_cli("sweep", "--max-perimeter", 9, "--json", report_path)
        self.assertEqual(code, 0)
        report = json.loads(report_path.read_text(encoding="utf-8"))
        self.assertEqual(report["summary"]["failures"], 0)
        self.assertEqual(report["summary"]["total"], len(report["entries"]))
        self.assertGreater(report["summary"]["total"], 0)
        self.assertEqual(report["census"]["f1"], 53)
        self.assertIn("failures 0", out)

    @pytest.mark.slow
    def test_brute_force_sweep_to_nineteen(self):
        report = commands.run_sweep(max_perimeter=19, counter="brute")
        self.assertEqual(report.summary.failures, 0)
        self.assertEqual(report.summary.total, sum(len(valid_triples(f, 19)) for f in Family))
        self.assertTrue(all(e.count == e.formula and e.alpha is not None for e in report.entries))
        self.assertEqual((report.census.f1, report.census.f2), (53, 28))

    def test_sweep_rejects_even_perimeter(self):
        code, _ = run_cli("sweep", "--max-perimeter", 8)
        self.assertEqual(code, 2)


class TestGraphVerbs(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_export_graph(self):
        path = self.dir / "dr1.mg"
        code, _ = run_cli("export-graph", 1, 1, 1, 0, "--output", path)
        self.assertEqual(code, 0)
        graph = read_graph_text(path.read_text(encoding="utf-8"))
        black, white = graph.color_classes()
        self.assertEqual(len(black), len(white))

    def test_kuo_check(self):
        path = self.dir / "c4.mg"
        path.write_text(write_graph_text(cycle_graph(4)), encoding="utf-8")
        code, out = run_cli("kuo-check", path, 0, 1, 2, 3)
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertTrue(result["holds"])
        self.assertEqual((result["lhs"], result["rhs1"], result["rhs2"]), ("2", "1", "1"))

    def test_kuo_check_bad_input(self):
        path = self.dir / "c4.mg"
        path.write_text(write_graph_text(cycle_graph(4)), encoding="utf-8")
        self.assertEqual(run_cli("kuo-check", path, 0, 1, 2, 9)[0], 2)
        self.assertEqual(run_cli("kuo-check", path, 0, 0, 2, 2)[0], 2)
        self.assertEqual(run_cli("kuo-check", self.dir / "missing.mg", 0, 1, 2, 3)[0], 2)

    def test_render(self):
        path = self.dir / "out" / "dr2.svg"
        code, _ = run_cli("render", 2, 2, 3, 1, "--output", path)
        self.assertEqual(code, 0)
        self.assertTrue(path.read_text(encoding="utf-8").startswith("<?xml"))


class TestIdentitySuites(unittest.TestCase):
    def settings(self, **kuo):
        return {
            "counting": {"counter": "kasteleyn", "cross_check_max_vertices": 24},
            "identities": {"flip_grid": 1},
            "kuo": {"max_perimeter": 1, "cycles": [4], "grids": [[2, 3]], **kuo},
        }

    def test_kuo_checks_every_four_point_with_both_counters(self):
        report = commands.run_identities("kuo", settings=self.settings())
        # C4: one per face; 2x3 grid: one per square and six on the outer face
        self.assertEqual(report.checked, 2 * (2 + 8))
        self.assertEqual(report.failures, 0)
        self.assertEqual(report.skipped, 0)

    def test_kuo_cap_reports_skipped(self):
        report = commands.run_identities("kuo", settings=self.settings(max_four_points_per_face=1))
        self.assertEqual(report.checked, 2 * 5)
        self.assertEqual(report.skipped, 5)
        self.assertTrue(report.passed)

    def test_flip_suite_checks_isomorphism(self):
        report = commands.run_identities("flips", settings=self.settings(max_perimeter=9))
        self.assertTrue(report.passed, report.counterexample)
        regions = sum(len(valid_triples(f, 9)) for f in Family)
        # count and isomorphism per region, on top of the formula-level grid
        self.assertGreater(report.checked, 2 * regions)

    def test_flip_that_leaves_the_domain_is_a_failure(self):
        failing = mock.Mock(side_effect=InvalidSpec("not a region"))
        with mock.patch.object(commands, "flip_over_b", failing), mock.patch.object(commands, "flip_horizontal", failing):
            report = commands.run_identities("flips", settings=self.settings(max_perimeter=9))
        regions = sum(len(valid_triples(f, 9)) for f in Family)
        self.assertEqual(report.failures, regions)
        self.assertIn("is not a region", report.counterexample)
