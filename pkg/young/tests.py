#!/usr/bin/env python3
# www.jrodal.com

import os
import unittest

import numpy as np

from forge_utils.manifest_test_case import ManifestTestCase
from young import (
    Partition,
    contains,
    irrep_dim,
    irreps_with_dim,
    is_trivial_for,
    make_partition,
    partitions_in_box,
    partitions_of_weight,
    random_partitions,
    reduce_mod,
    render_ascii,
    transpose,
    weight,
)


class YoungManifestTests(ManifestTestCase):
    _OPERATIONS = {
        "make_partition": make_partition,
        "transpose": transpose,
        "weight": weight,
        "irrep_dim": irrep_dim,
        "is_trivial_for": is_trivial_for,
        "reduce_mod": reduce_mod,
        "render_ascii": render_ascii,
    }
    _MANIFEST_PATH = os.path.join(os.path.dirname(__file__), "test_manifest.yml")


class PartitionPropertyTests(unittest.TestCase):
    def test_transpose_is_an_involution(self) -> None:
        for lam in partitions_in_box(4, 5):
            with self.subTest(lam=str(lam)):
                self.assertEqual(lam, transpose(transpose(lam)))
                self.assertEqual(weight(lam), weight(transpose(lam)))

    def test_reduction_preserves_dimension(self) -> None:
        for m in range(1, 5):
            for lam in partitions_in_box(m, 4):
                with self.subTest(lam=str(lam), m=m):
                    reduced = reduce_mod(lam, m)
                    self.assertLess(len(reduced), max(m, 1))
                    self.assertEqual(irrep_dim(lam, m), irrep_dim(reduced, m))

    def test_dimension_one_exactly_for_trivial(self) -> None:
        for m in range(2, 5):
            for lam in partitions_in_box(m, 3):
                with self.subTest(lam=str(lam), m=m):
                    dim = irrep_dim(lam, m)
                    self.assertGreaterEqual(dim, 1)
                    self.assertEqual(dim == 1, is_trivial_for(lam, m))

    def test_dimension_of_sym_power_of_c2(self) -> None:
        for n in range(8):
            self.assertEqual(n + 1, irrep_dim([n], 2))

    def test_six_dimensional_irreps(self) -> None:
        self.assertEqual([Partition((2,)), Partition((2, 2))], irreps_with_dim(6, 3, 12))
        # exterior square of C4
        self.assertEqual([Partition((1, 1))], irreps_with_dim(6, 4, 12))
        self.assertEqual([], irreps_with_dim(6, 5, 12))
        self.assertIn(Partition((5,)), irreps_with_dim(6, 2, 12))
        self.assertIn(Partition((1,)), irreps_with_dim(6, 6, 12))

    def test_partitions_in_box_order_and_count(self) -> None:
        box = list(partitions_in_box(2, 2))
        self.assertEqual(
            [(2, 2), (2, 1), (2,), (1, 1), (1,), ()], [lam.parts for lam in box]
        )
        # binomial(rows + cols, rows)
        self.assertEqual(35, len(list(partitions_in_box(3, 4))))

    def test_partitions_of_weight(self) -> None:
        self.assertEqual(7, len(list(partitions_of_weight(5))))
        self.assertEqual(
            [(3,), (2, 1)], [lam.parts for lam in partitions_of_weight(3, 2)]
        )

    def test_containment(self) -> None:
        self.assertTrue(contains([4, 2], [2]))
        self.assertTrue(contains([4, 2], []))
        self.assertFalse(contains([4, 2], [2, 2, 1]))
        self.assertFalse(contains([4], [2, 1]))

    def test_random_partitions_are_reproducible(self) -> None:
        first = random_partitions(np.random.default_rng(7), 20, 5, 9, exact_rows=True)
        second = random_partitions(np.random.default_rng(7), 20, 5, 9, exact_rows=True)
        self.assertEqual(first, second)
        for lam in first:
            self.assertEqual(5, len(lam))
            self.assertLessEqual(lam[0], 9)

    def test_part_indexing(self) -> None:
        lam = Partition((5, 4, 3, 2))
        self.assertEqual(5, lam.part(1))
        self.assertEqual(0, lam.part(7))
        self.assertEqual(1, lam.diff(2, 3))
        self.assertEqual("5.4.3.2", lam.label)

    def test_render_labels_widen_boxes(self) -> None:
        class Filled:
            base = Partition((1,))
            labels = ((), (10,))

        self.assertEqual("[  ]\n[10]", render_ascii(Filled()))
