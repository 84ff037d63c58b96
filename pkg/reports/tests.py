#!/usr/bin/env python3
# www.jrodal.com

import json
import os
import unittest

from click.testing import CliRunner

from forge_utils.manifest_test_case import ManifestTestCase
from main import EXIT_INPUT, EXIT_RESOURCE, cli
from reports import (
    acceptance_theorem_cases,
    build_table,
    catalan_sweep,
    check_theorem_case,
    kernel_route_sweep,
    load_printed,
    lr_oracle_sweep,
    pairing_span,
    random_theorem_cases,
    run_parallel,
    table_1_cell,
    table_2_cell,
    theorem_cases,
    theorem_sweep,
)
from young import Partition


def _square(x: int) -> int:
    return x * x


def _trivial_mult_json(lam: str, m: int, n_parties: int, method: str = "iterated") -> dict:
    args = ["--lambda", lam, "--m", str(m), "--n-parties", str(n_parties), "--method", method]
    result = CliRunner().invoke(cli, ["--format", "json", "trivial-mult", *args])
    return json.loads(result.stdout)


class ReportsManifestTests(ManifestTestCase):
    _OPERATIONS = {
        "table_1_cell": table_1_cell,
        "table_2_cell": table_2_cell,
        "theorem_cases": lambda max_n, max_part: len(theorem_cases(max_n, max_part)),
        "trivial_mult_json": _trivial_mult_json,
    }
    _MANIFEST_PATH = os.path.join(os.path.dirname(__file__), "test_manifest.yml")


class ParallelTests(unittest.TestCase):
    def test_inline_and_pooled_agree(self) -> None:
        items = [(x,) for x in range(10)]
        self.assertEqual(
            run_parallel(_square, items, jobs=1), run_parallel(_square, items, jobs=2)
        )

    def test_keeps_input_order(self) -> None:
        self.assertEqual([0, 1, 4, 9], run_parallel(_square, [(0,), (1,), (2,), (3,)], jobs=2))


class TableTests(unittest.TestCase):
    def test_table_one_matches_printed_grid(self) -> None:
        table = build_table(1, jobs=1)
        printed = load_printed()["table_1"]["rows"]
        self.assertEqual(60, len(table.cells))
        self.assertEqual([], table.mismatches())
        self.assertEqual(5, len(table.misprints()))
        for d in table.ds:
            with self.subTest(d=d):
                self.assertEqual([0] + printed[d][1:], table.row(d))

    def test_table_one_catalan_annotations(self) -> None:
        table = build_table(1, ds=range(2, 5), ns=range(1, 13), jobs=1)
        for cell in table.cells:
            with self.subTest(d=cell.d, N=cell.n_parties):
                if cell.n_parties % cell.d:
                    self.assertIsNone(cell.catalan)
                else:
                    self.assertEqual(cell.value, cell.catalan)

    def test_table_two_small_cells(self) -> None:
        table = build_table(2, ds=range(3, 6), ns=range(1, 6), jobs=1)
        self.assertTrue(table.ok, table.mismatches())
        self.assertEqual([0, 1, 1, 3, 6], table.row(3))
        self.assertEqual([0, 1, 0, 4, 0], table.row(4))
        self.assertEqual({"kernel"}, {cell.method for cell in table.cells})

    def test_table_two_kernel_cells_at_bounds(self) -> None:
        printed = load_printed()["table_2"]["rows"]
        for d, n_max in [(3, 9), (4, 7), (5, 6), (6, 5), (7, 5)]:
            for n in range(1, n_max + 1):
                cell = table_2_cell(d, n)
                with self.subTest(d=d, N=n):
                    self.assertEqual("kernel", cell.method)
                    self.assertEqual(0 if n == 1 else printed[d][n - 1], cell.value)

    def test_json_uses_decimal_strings(self) -> None:
        table = build_table(1, ds=range(2, 3), ns=range(1, 7), jobs=1)
        data = table.to_json()
        self.assertEqual("lme-forge/1", data["schema"])
        self.assertEqual(0, data["mismatches"])
        last = data["cells"][-1]
        self.assertEqual(("5", "5", True), (last["value"], last["printed"], last["matches"]))
        self.assertEqual("single-party misprint", data["cells"][0]["note"])

    def test_rendering_has_a_column_per_party_count(self) -> None:
        table = build_table(2, ds=range(3, 4), ns=range(1, 4), jobs=1)
        self.assertEqual(4, len(table.render().columns))


class SweepTests(unittest.TestCase):
    def test_small_theorem_sweep(self) -> None:
        report = theorem_sweep(theorem_cases(4, 3), jobs=1)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(len(theorem_cases(4, 3)), report.passed)

    def test_two_party_family(self) -> None:
        report = theorem_sweep(theorem_cases(2, 9), jobs=1)
        self.assertTrue(report.ok, report.failures)

    def test_random_cases_are_reproducible(self) -> None:
        first = random_theorem_cases(6, 5, seed=42)
        self.assertEqual(first, random_theorem_cases(6, 5, seed=42))
        self.assertTrue(all(len(lam) <= 5 and n == 6 for lam, n in first))

    def test_single_case(self) -> None:
        self.assertIsNone(check_theorem_case(Partition((2, 2, 1)), 4))

    def test_acceptance_theorem_cases(self) -> None:
        cases = acceptance_theorem_cases()
        self.assertEqual(168, len(cases))
        for lam, n in cases:
            with self.subTest(lam=lam.to_plain(), N=n):
                self.assertIsNone(check_theorem_case(lam, n))

    def test_lr_oracle_at_full_bounds(self) -> None:
        report = lr_oracle_sweep(jobs=1)
        self.assertEqual([], list(report.failures))
        self.assertTrue(report.ok)

    def test_lr_oracle(self) -> None:
        report = lr_oracle_sweep(max_weight=3, max_m=3, jobs=1)
        self.assertTrue(report.ok, report.failures)
        self.assertGreater(report.total, 50)

    def test_catalan_triple(self) -> None:
        report = catalan_sweep(max_d=3, max_k=3)
        self.assertTrue(report.ok, report.failures)
        self.assertEqual(6, report.total)

    def test_kernel_route(self) -> None:
        report = kernel_route_sweep(max_d=3, max_n=4, jobs=1)
        self.assertTrue(report.ok, report.failures)

    def test_pairings(self) -> None:
        for d in (3, 5):
            with self.subTest(d=d):
                span = pairing_span(d)
                self.assertTrue(span.invariant)
                self.assertEqual(3, span.kernel_dim)
                self.assertTrue(span.spans_kernel)
        four = pairing_span(4)
        self.assertEqual((4, 3), (four.kernel_dim, four.pairing_rank))
        self.assertFalse(four.spans_kernel)


class CliTests(unittest.TestCase):
    def setUp(self) -> None:
        self.runner = CliRunner()

    def _json(self, *args: str) -> dict:
        result = self.runner.invoke(cli, ["--format", "json", "--jobs", "1", *args])
        self.assertEqual(0, result.exit_code, result.output)
        return json.loads(result.stdout)

    def test_decompose(self) -> None:
        data = self._json("decompose", "--lambda", "1", "--eta", "1", "--m", "2")
        self.assertEqual({"2": "1", "1.1": "1"}, data["components"])

    def test_power_reports_trivial(self) -> None:
        self.assertEqual(
            "1", self._json("power", "--lambda", "2", "--m", "3", "--n-parties", "3")["trivial"]
        )
        self.assertEqual(
            "0", self._json("power", "--lambda", "1", "--m", "3", "--n-parties", "5")["trivial"]
        )

    def test_trivial_mult_methods_agree(self) -> None:
        for method in ("iterated", "staircase"):
            with self.subTest(method=method):
                data = self._json(
                    "trivial-mult", "--lambda", "2,1", "--m", "3", "--n-parties", "3", "--method", method
                )
                self.assertEqual("2", data["trivial_multiplicity"])

    def test_construct(self) -> None:
        for lam, n, final in [("2,1", 3, [3, 3, 3]), ("1", 2, [1, 1]), ("5,5,2", 6, [12] * 6)]:
            with self.subTest(lam=lam, N=n):
                data = self._json("construct", "--lambda", lam, "--n-parties", str(n), "--trace")
                self.assertEqual(final, data["final"])
                self.assertTrue(data["report"]["ok"])
                self.assertEqual(n, len(data["trace"]))

    def test_verify_theorem(self) -> None:
        data = self._json("verify-theorem", "--max-n", "3", "--max-part", "2")
        self.assertEqual((7, 0), (data["total"], data["failed"]))

    def test_synthesize(self) -> None:
        data = self._json("synthesize", "--group", "su", "--d", "2", "--n-parties", "4", "--basis")
        self.assertEqual(2, data["dimension"])
        self.assertTrue(all(state["lme"] for state in data["basis"]))
        data = self._json("synthesize", "--group", "boson", "--d", "3", "--bosons", "2", "--n-parties", "3")
        self.assertEqual((1, 6, True), (data["dimension"], data["local_dim"], data["all_lme"]))

    def test_synthesize_modes_alias(self) -> None:
        args = ["synthesize", "--group", "boson", "--bosons", "2", "--n-parties", "3"]
        self.assertEqual(
            self._json(*args, "--d", "3"), self._json(*args, "--modes", "3")
        )
        self.assertEqual(6, self._json(*args, "--modes", "3")["local_dim"])

    def test_tables(self) -> None:
        data = self._json("tables", "1", "--d-max", "3", "--n-max", "6")
        self.assertEqual(0, data["mismatches"])
        self.assertEqual(12, len(data["cells"]))

    def test_ascii_output(self) -> None:
        result = self.runner.invoke(cli, ["construct", "--lambda", "3,1", "--n-parties", "3"])
        self.assertEqual(0, result.exit_code, result.output)
        self.assertIn("all conditions hold", result.output)

    def test_exit_codes(self) -> None:
        cases = [
            (["construct", "--lambda", "1,1,1", "--n-parties", "3"], EXIT_INPUT),
            (["decompose", "--lambda", "1,2", "--eta", "1"], EXIT_INPUT),
            (["--cap-dims", "10", "synthesize", "--d", "2", "--n-parties", "4"], EXIT_RESOURCE),
            (["synthesize", "--group", "so", "--d", "2", "--n-parties", "2"], EXIT_INPUT),
        ]
        for args, code in cases:
            with self.subTest(args=args):
                self.assertEqual(code, self.runner.invoke(cli, args).exit_code)


if __name__ == "__main__":
    unittest.main()
