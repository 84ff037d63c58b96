#!/usr/bin/env python3
# www.jrodal.com

import os
import unittest

from collections import Counter
from itertools import product
from typing import Iterator

from forge_utils.manifest_test_case import ManifestTestCase
from lrcalc import (
    LabeledDiagram,
    enumerate_lr_fillings,
    lattice_word_ok,
    lr_coefficient,
    lr_expand,
    lr_oracle_coefficient,
    lr_skew_coefficient,
    validate_filling,
)
from young import Partition, contains, irrep_dim, partitions_in_box, partitions_of_weight


class LRManifestTests(ManifestTestCase):
    _OPERATIONS = {
        "lr_expand": lr_expand,
        "lr_coefficient": lr_coefficient,
        "lr_skew_coefficient": lr_skew_coefficient,
        "lr_oracle_coefficient": lr_oracle_coefficient,
    }
    _MANIFEST_PATH = os.path.join(os.path.dirname(__file__), "test_manifest.yml")


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


def brute_force_fillings(lam: Partition, eta: Partition, n_rows: int) -> list[LabeledDiagram]:
    """Every way of dropping eta's labels into rows, validity unchecked."""
    per_label = [list(compositions(count, n_rows)) for count in eta]
    fillings = []
    for choice in product(*per_label):
        counts = [
            {t: choice[t - 1][r] for t in range(1, len(eta) + 1)} for r in range(n_rows)
        ]
        fillings.append(LabeledDiagram.from_counts(lam, counts))
    return fillings


def small_pairs(max_weight: int) -> Iterator[tuple[Partition, Partition]]:
    shapes = [lam for n in range(max_weight + 1) for lam in partitions_of_weight(n)]
    for lam in shapes:
        for eta in shapes:
            yield lam, eta


class ValidateFillingTests(unittest.TestCase):
    def test_square_of_single_row_reaches_rectangle(self) -> None:
        filling = LabeledDiagram(Partition((3,)), ((), (1, 1, 1)))
        report = validate_filling(filling, 2)
        self.assertTrue(report.valid, report.details)
        self.assertEqual(Partition((3, 3)), filling.shape)

    def test_stacked_labels_break_columns(self) -> None:
        report = validate_filling(LabeledDiagram(Partition(()), ((1,), (1,))), 2)
        self.assertEqual([2], report.failed)

    def test_label_two_above_label_one_breaks_row_counting(self) -> None:
        filling = LabeledDiagram(Partition((1,)), ((2,), (1,)))
        report = validate_filling(filling, 3)
        self.assertIn(3, report.failed)
        self.assertFalse(lattice_word_ok(filling))

    def test_column_counting_scans_from_the_right(self) -> None:
        # label 2 in the rightmost column while label 1 sits further left
        filling = LabeledDiagram(Partition((2, 2)), ((1, 2),))
        report = validate_filling(filling, 2)
        self.assertTrue(report.row_counting)
        self.assertFalse(report.column_counting)

    def test_row_bound(self) -> None:
        filling = LabeledDiagram(Partition((1,)), ((), (1,)))
        self.assertEqual([5], validate_filling(filling, 1).failed)
        self.assertTrue(validate_filling(filling, None).valid)

    def test_non_young_result(self) -> None:
        filling = LabeledDiagram(Partition((1,)), ((), (1, 1)))
        self.assertIn(1, validate_filling(filling, 3).failed)

    def test_valid_iff_semistandard_lattice(self) -> None:
        for lam, eta in small_pairs(3):
            n_rows = len(lam) + len(eta)
            for filling in brute_force_fillings(lam, eta, n_rows):
                report = validate_filling(filling, None)
                lattice = (
                    report.shape and report.columns and lattice_word_ok(filling)
                )
                with self.subTest(lam=str(lam), eta=str(eta), labels=filling.labels):
                    self.assertEqual(lattice, report.valid)


class EnumerationTests(unittest.TestCase):
    def test_pieri_row(self) -> None:
        fillings = enumerate_lr_fillings([2], [2], 3)
        self.assertEqual(
            [(4,), (3, 1), (2, 2)], [f.shape.parts for f in fillings]
        )
        for f in fillings:
            self.assertTrue(validate_filling(f, 3).valid)

    def test_two_boxes(self) -> None:
        self.assertEqual(2, len(enumerate_lr_fillings([1], [1], 2)))

    def test_single_row_group(self) -> None:
        fillings = enumerate_lr_fillings([1], [2], 1)
        self.assertEqual([(3,)], [f.shape.parts for f in fillings])

    def test_enumeration_matches_filtered_brute_force(self) -> None:
        for lam, eta in small_pairs(3):
            for m in (None, 2, 3):
                if m is not None and (len(lam) > m or len(eta) > m):
                    continue
                n_rows = len(lam) + len(eta)
                expected = Counter(
                    f.shape
                    for f in brute_force_fillings(lam, eta, n_rows)
                    if validate_filling(f, m).valid
                )
                fillings = enumerate_lr_fillings(lam, eta, m)
                with self.subTest(lam=str(lam), eta=str(eta), m=m):
                    self.assertEqual(expected, Counter(f.shape for f in fillings))
                    self.assertEqual(dict(expected), lr_expand(lam, eta, m).entries)

    def test_order_is_descending_by_shape(self) -> None:
        shapes = [f.shape for f in enumerate_lr_fillings([2, 1], [2, 1], 3)]
        self.assertEqual(sorted(shapes, reverse=True), shapes)
        self.assertEqual(shapes.count(Partition((3, 2, 1))), 2)

    def test_within_prunes_outside_shapes(self) -> None:
        expansion = lr_expand([2, 1], [2, 1], 3, within=[3, 3, 3])
        self.assertEqual({"3.3": 1, "3.2.1": 2, "2.2.2": 1}, expansion.to_plain())


class LRPropertyTests(unittest.TestCase):
    def test_weight_and_containment(self) -> None:
        for lam, eta in small_pairs(4):
            for nu, _ in lr_expand(lam, eta, None):
                with self.subTest(lam=str(lam), eta=str(eta), nu=str(nu)):
                    self.assertEqual(lam.weight + eta.weight, nu.weight)
                    self.assertTrue(contains(nu, lam))

    def test_dimension_conservation(self) -> None:
        for m in range(2, 6):
            box = list(partitions_in_box(m, 2 if m > 3 else 3))
            for lam in box:
                for eta in box:
                    with self.subTest(lam=str(lam), eta=str(eta), m=m):
                        expansion = lr_expand(lam, eta, m)
                        self.assertEqual(
                            irrep_dim(lam, m) * irrep_dim(eta, m),
                            expansion.reduced(m).total_dim(m),
                        )

    def test_commutativity(self) -> None:
        for lam, eta in small_pairs(3):
            for nu in partitions_of_weight(lam.weight + eta.weight):
                with self.subTest(lam=str(lam), eta=str(eta), nu=str(nu)):
                    self.assertEqual(
                        lr_coefficient(lam, eta, nu), lr_coefficient(eta, lam, nu)
                    )

    def test_oracle_equivalence(self) -> None:
        for lam, eta in small_pairs(4):
            for nu in partitions_of_weight(lam.weight + eta.weight):
                with self.subTest(lam=str(lam), eta=str(eta), nu=str(nu)):
                    self.assertEqual(
                        lr_oracle_coefficient(lam, eta, nu),
                        lr_coefficient(lam, eta, nu),
                    )

    def test_square_contains_staircase_of_rows(self) -> None:
        for lam in partitions_in_box(2, 4):
            if not lam:
                continue
            target = Partition((lam.part(1) + lam.part(2), lam.part(1), lam.part(2)))
            target = Partition(tuple(p for p in target if p))
            with self.subTest(lam=str(lam)):
                self.assertGreaterEqual(lr_expand(lam, lam, 3).multiplicity(target), 1)

    def test_trivial_in_square_of_adjoint(self) -> None:
        square = lr_expand([2, 1], [2, 1], 3)
        self.assertEqual(1, square.multiplicity([2, 2, 2]))
        self.assertIn((2, 2, 2), square)
        self.assertNotIn((5, 1), square)
