#!/usr/bin/env python3
# www.jrodal.com

import os
import unittest

import numpy as np
import yaml

from forge_utils.errors import ConditionViolation
from forge_utils.helpers import parse_lambda_terms
from forge_utils.manifest_test_case import ManifestTestCase
from telescope import (
    PIECEWISE_FORMULAS,
    ExpansionPlan,
    LabelBlock,
    PlanStep,
    Telescope,
    beg_len_end,
    boxes_added,
    boxes_added_piecewise,
    build_expansion_plan,
    delta,
    execute_plan,
    piecewise_domain,
    simulate_row_lengths,
    small_delta,
    telescope_entries,
    verify_conditions,
)
from young import Partition, partitions_in_box, random_partitions

_HERE = os.path.dirname(__file__)


def _final_shape(lam, n):
    return execute_plan(build_expansion_plan(lam, n))[0]


def _evaluate(expr: str, lam: Partition) -> int:
    return sum(sign * lam.diff(p, q) for sign, p, q in parse_lambda_terms(expr))


class TelescopeManifestTests(ManifestTestCase):
    _OPERATIONS = {
        "beg_len_end": beg_len_end,
        "telescope_entries": telescope_entries,
        "boxes_added": boxes_added,
        "boxes_added_piecewise": boxes_added_piecewise,
        "piecewise_domain": piecewise_domain,
        "build_expansion_plan": build_expansion_plan,
        "final_shape": _final_shape,
        "delta": delta,
        "small_delta": small_delta,
        "verify_conditions": verify_conditions,
    }
    _MANIFEST_PATH = os.path.join(_HERE, "test_manifest.yml")


class TelescopeTests(unittest.TestCase):
    def setUp(self) -> None:
        self.rng = np.random.default_rng(7)

    def test_partial_sums_climb_the_rows(self) -> None:
        for lam in random_partitions(self.rng, 50, 6, 9):
            for p in range(1, 7):
                for q in range(1, 8 - p):
                    telescope = Telescope.of(p, q, lam)
                    with self.subTest(lam=str(lam), p=p, q=q):
                        self.assertEqual(
                            tuple(lam.part(j) for j in range(p + q - 1, p - 1, -1)),
                            telescope.partial_sums(),
                        )
                        self.assertEqual(lam.part(p), telescope.total)

    def test_entry_counts_from_the_bottom(self) -> None:
        telescope = Telescope.of(2, 3, (5, 4, 3, 2))
        self.assertEqual((2, 1, 1), telescope.entries)
        self.assertEqual(1, telescope.entry(1))
        self.assertEqual(2, telescope.entry(3))
        self.assertEqual(0, telescope.entry(4))

    def test_rejects_negative_entries(self) -> None:
        with self.assertRaises(ValueError):
            Telescope(1, 2, (1, -1))


class PiecewiseTests(unittest.TestCase):
    SHIFTS = {
        "A1": [(0, 1, 1), (0, -1, -1), (1, -2, 0), (-1, 2, 0), (1, 0, 2), (-1, 0, -2)],
        "A2": [(1, -1, 0), (-1, 1, 0), (0, 0, 1), (0, 0, -1)],
        "B1": [(1, 0, 1), (-1, 0, -1), (0, 1, 0), (0, -1, 0)],
    }

    def setUp(self) -> None:
        self.rng = np.random.default_rng(11)

    def test_closed_forms_match_telescope_indexing(self) -> None:
        for n_parties in range(2, 9):
            for lam in random_partitions(self.rng, 20, n_parties - 1, 9):
                for n in range(1, n_parties + 1):
                    for k in range(1, n_parties + 1):
                        for i in range(1, n_parties + 1):
                            with self.subTest(lam=str(lam), N=n_parties, n=n, k=k, i=i):
                                self.assertEqual(
                                    boxes_added(n, k, i, lam, n_parties),
                                    boxes_added_piecewise(n, k, i, lam, n_parties),
                                )

    def test_translation_identities(self) -> None:
        for n_parties in range(5, 9):
            for lam in random_partitions(self.rng, 10, n_parties - 1, 9):
                for n in range(1, n_parties):
                    for k in range(1, n_parties + 1):
                        for i in range(1, n_parties + 1):
                            domain = piecewise_domain(n, k, i, n_parties)
                            if domain not in self.SHIFTS:
                                continue
                            value = boxes_added(n, k, i, lam, n_parties)
                            for dn, dk, di in self.SHIFTS[domain]:
                                moved = (n + dn, k + dk, i + di)
                                if not all(1 <= x <= n_parties for x in moved):
                                    continue
                                with self.subTest(
                                    lam=str(lam), N=n_parties, point=(n, k, i), moved=moved
                                ):
                                    formula = PIECEWISE_FORMULAS[domain]
                                    self.assertEqual(value, formula(*moved, lam, n_parties))
                                    if piecewise_domain(*moved, n_parties) == domain:
                                        self.assertEqual(
                                            value, boxes_added(*moved, lam, n_parties)
                                        )

    def test_b2_is_constant(self) -> None:
        for n_parties in range(3, 8):
            for lam in random_partitions(self.rng, 10, n_parties - 1, 9):
                values = {
                    boxes_added(n, k, n + 1, lam, n_parties)
                    for n in range(1, n_parties - 1)
                    for k in range(n_parties - n + 1, n_parties + 1)
                }
                with self.subTest(lam=str(lam), N=n_parties):
                    self.assertEqual({lam.part(n_parties - 1)}, values)


class PlanTests(unittest.TestCase):
    def setUp(self) -> None:
        self.rng = np.random.default_rng(3)

    def test_counts_follow_boxes_added(self) -> None:
        for n_parties in range(2, 8):
            for lam in random_partitions(self.rng, 5, max(1, n_parties - 1), 9):
                if len(lam) > n_parties - 1:
                    continue
                plan = build_expansion_plan(lam, n_parties)
                for step in plan.steps:
                    counts = step.counts_by_row(n_parties)
                    self.assertEqual(list(range(1, n_parties)), [b.label for b in step.blocks])
                    for n in range(1, n_parties):
                        for i in range(1, n_parties + 1):
                            with self.subTest(lam=str(lam), N=n_parties, k=step.step, n=n, i=i):
                                self.assertEqual(
                                    boxes_added(n, step.step, i, lam, n_parties),
                                    counts[i - 1].get(n, 0),
                                )

    def test_three_party_intermediate_shapes(self) -> None:
        plan = build_expansion_plan((3, 1), 3)
        history = simulate_row_lengths(plan)
        self.assertEqual([(0, 0, 0), (3, 1, 0), (4, 3, 1), (4, 4, 4)], history)

    def test_trace_is_relative_to_each_step(self) -> None:
        plan = build_expansion_plan((4, 2, 1), 5)
        final, trace = execute_plan(plan)
        history = simulate_row_lengths(plan)
        self.assertEqual(Partition((7,) * 5), final)
        self.assertEqual(5, len(trace))
        for k, filling in enumerate(trace):
            with self.subTest(step=k + 1):
                self.assertEqual(history[k], filling.base.padded(5))
                self.assertEqual(history[k + 1], filling.row_lengths)

    def test_one_party_needs_the_empty_diagram(self) -> None:
        final, trace = execute_plan(build_expansion_plan((), 1))
        self.assertEqual(Partition(()), final)
        self.assertEqual(1, len(trace))

    def test_row_counting_violation_is_reported(self) -> None:
        plan = ExpansionPlan(
            2, Partition((1,)), (PlanStep(1, (LabelBlock(2, 1, 1, (1,)),)),)
        )
        with self.assertRaises(ConditionViolation) as ctx:
            execute_plan(plan)
        self.assertEqual((1, 3), (ctx.exception.step, ctx.exception.condition))

    def test_short_plan_misses_the_rectangle(self) -> None:
        plan = ExpansionPlan(
            2, Partition((1,)), (PlanStep(1, (LabelBlock(1, 1, 1, (1,)),)),)
        )
        with self.assertRaises(ConditionViolation) as ctx:
            execute_plan(plan)
        self.assertEqual((2, 5), (ctx.exception.step, ctx.exception.condition))

    def test_theorem_sweep_reaches_rectangle(self) -> None:
        for n_parties in range(2, 8):
            max_part = 4 if n_parties <= 5 else 2
            for lam in partitions_in_box(n_parties - 1, max_part):
                with self.subTest(lam=str(lam), N=n_parties):
                    final, _ = execute_plan(build_expansion_plan(lam, n_parties))
                    self.assertEqual(Partition((lam.weight,) * n_parties) if lam else Partition(()), final)


class DeltaTests(unittest.TestCase):
    def setUp(self) -> None:
        self.rng = np.random.default_rng(5)

    def test_delta_matches_simulated_row_lengths(self) -> None:
        for n_parties in range(3, 8):
            for lam in random_partitions(self.rng, 200, n_parties - 1, 9):
                history = simulate_row_lengths(build_expansion_plan(lam, n_parties))
                for k in range(1, n_parties + 1):
                    for i in range(1, n_parties):
                        with self.subTest(lam=str(lam), N=n_parties, k=k, i=i):
                            self.assertEqual(
                                history[k - 1][i - 1] - history[k - 1][i],
                                delta(i, k, lam, n_parties),
                            )

    def test_second_step_bottom_row(self) -> None:
        for n_parties in range(3, 9):
            for lam in random_partitions(self.rng, 10, n_parties - 1, 9):
                with self.subTest(lam=str(lam), N=n_parties):
                    self.assertEqual(
                        lam.part(n_parties - 1), delta(n_parties - 1, 2, lam, n_parties)
                    )

    def test_six_party_closed_forms(self) -> None:
        with open(os.path.join(_HERE, "data", "six_party_deltas.yml")) as f:
            tables = yaml.safe_load(f)
        n_parties = tables["n_parties"]
        for lam in random_partitions(self.rng, 100, 5, 9, exact_rows=True):
            for i, row in tables["delta"].items():
                for k, expr in row.items():
                    with self.subTest(lam=str(lam), table="delta", i=i, k=k):
                        self.assertEqual(_evaluate(expr, lam), delta(i, k, lam, n_parties))
            for m, table in tables["small_delta"].items():
                for i, row in table.items():
                    for k, expr in row.items():
                        with self.subTest(lam=str(lam), table=f"small_delta({m})", i=i, k=k):
                            self.assertEqual(
                                _evaluate(expr, lam), small_delta(i, k, m, lam, n_parties)
                            )


class VerificationTests(unittest.TestCase):
    def test_random_sweep_passes(self) -> None:
        rng = np.random.default_rng(13)
        for n_parties in (5, 6, 7):
            for lam in random_partitions(rng, 200, n_parties - 1, 9):
                report = verify_conditions(lam, n_parties)
                with self.subTest(lam=str(lam), N=n_parties):
                    self.assertTrue(report.ok, report.failures)

    def test_small_examples(self) -> None:
        for lam, n in [((3, 1), 3), ((1,), 2), ((2, 1), 4)]:
            with self.subTest(lam=lam, N=n):
                self.assertTrue(verify_conditions(lam, n).ok)


if __name__ == "__main__":
    unittest.main()
