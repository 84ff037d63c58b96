#!/usr/bin/env python3
# www.jrodal.com

import os
import unittest

from forge_utils.errors import ResourceBound
from forge_utils.manifest_test_case import ManifestTestCase
from powerdecomp import (
    PowerQuery,
    catalan_multidim,
    dyck_sequence_count,
    dyck_sequences,
    fulton_staircase,
    necessary_condition,
    su2_singlet_multiplicity,
    tensor_power_decompose,
    trivial_multiplicity,
)
from young import (
    Partition,
    irrep_dim,
    is_trivial_for,
    partitions_in_box,
    partitions_of_weight,
)


def _query(lam, m, n):
    return PowerQuery.of(lam, m, n)


class PowerManifestTests(ManifestTestCase):
    _OPERATIONS = {
        "tensor_power_decompose": lambda lam, m, n: tensor_power_decompose(
            _query(lam, m, n)
        ),
        "trivial_multiplicity": lambda lam, m, n, method="iterated": trivial_multiplicity(
            _query(lam, m, n), method
        ),
        "necessary_condition": lambda lam, m, n: necessary_condition(_query(lam, m, n)),
        "fulton_staircase": fulton_staircase,
        "catalan_multidim": catalan_multidim,
        "dyck_sequence_count": dyck_sequence_count,
        "su2_singlet_multiplicity": su2_singlet_multiplicity,
    }
    _MANIFEST_PATH = os.path.join(os.path.dirname(__file__), "test_manifest.yml")


class RouteAgreementTests(unittest.TestCase):
    def test_iterated_matches_staircase(self) -> None:
        for m in range(2, 5):
            for w in range(1, 5):
                for lam in partitions_of_weight(w, m):
                    for n in range(1, 5):
                        q = _query(lam, m, n)
                        with self.subTest(lam=str(lam), m=m, N=n):
                            self.assertEqual(
                                trivial_multiplicity(q, "iterated"),
                                trivial_multiplicity(q, "staircase"),
                            )

    def test_staircase_skew_shape_is_disconnected_copies(self) -> None:
        for lam in partitions_in_box(3, 3):
            if not lam:
                continue
            for n in range(1, 4):
                alpha, gamma = fulton_staircase(lam, n)
                with self.subTest(lam=str(lam), n=n):
                    self.assertEqual(n * lam.weight, gamma.weight - alpha.weight)
                    self.assertEqual(n * len(lam), len(gamma))


class TheoremSweepTests(unittest.TestCase):
    def test_power_m_contains_trivial(self) -> None:
        for n in range(2, 5):
            for lam in partitions_in_box(n - 1, 2):
                if not lam:
                    continue
                with self.subTest(lam=str(lam), N=n):
                    self.assertGreaterEqual(
                        trivial_multiplicity(_query(lam, n, n), "staircase"), 1
                    )

    def test_divisibility_is_necessary(self) -> None:
        for m in range(2, 5):
            for lam in partitions_in_box(m - 1, 2):
                for n in range(1, 5):
                    q = _query(lam, m, n)
                    if necessary_condition(q):
                        continue
                    with self.subTest(lam=str(lam), m=m, N=n):
                        self.assertEqual(0, trivial_multiplicity(q))
                        full = tensor_power_decompose(q)
                        self.assertFalse(
                            any(is_trivial_for(nu, m) for nu, _ in full)
                        )

    def test_adjoint_versus_spin_seven_halves(self) -> None:
        self.assertGreaterEqual(trivial_multiplicity(_query([2, 1], 3, 3)), 1)
        self.assertEqual(8, irrep_dim([2, 1], 3))
        self.assertEqual(8, irrep_dim([7], 2))
        self.assertFalse(necessary_condition(_query([7], 2, 3)))
        self.assertEqual(0, su2_singlet_multiplicity(8, 3))


class ClosedFormTests(unittest.TestCase):
    def test_catalan_identity(self) -> None:
        for d in range(2, 5):
            for k in range(1, 4):
                with self.subTest(d=d, k=k):
                    expected = catalan_multidim(d, k)
                    self.assertEqual(expected, dyck_sequence_count(d, k))
                    self.assertEqual(
                        expected, trivial_multiplicity(_query([1], d, k * d))
                    )

    def test_dyck_sequences_listed(self) -> None:
        self.assertEqual([(1, 1, 2, 2), (1, 2, 1, 2)], list(dyck_sequences(2, 2)))
        self.assertEqual([(1, 2, 3)], list(dyck_sequences(3, 1)))
        self.assertEqual(
            catalan_multidim(3, 3), sum(1 for _ in dyck_sequences(3, 3))
        )

    def test_spin_composition_matches_single_row_powers(self) -> None:
        for d in range(1, 6):
            for n in range(1, 9):
                with self.subTest(d=d, N=n):
                    lam = [d - 1] if d > 1 else []
                    self.assertEqual(
                        su2_singlet_multiplicity(d, n),
                        trivial_multiplicity(_query(lam, 2, n)),
                    )

    def test_even_spin_dimension_needs_even_parties(self) -> None:
        for d in (2, 4, 6):
            for n in (1, 3, 5, 7):
                self.assertEqual(0, su2_singlet_multiplicity(d, n))


class DecompositionTests(unittest.TestCase):
    def test_dimension_balance_of_natural_powers(self) -> None:
        for d in range(2, 5):
            for n in range(1, 6):
                with self.subTest(d=d, N=n):
                    full = tensor_power_decompose(_query([1], d, n))
                    self.assertEqual(d**n, full.total_dim(d))

    def test_natural_power_holds_every_diagram(self) -> None:
        for m in range(2, 4):
            for n in range(1, 6):
                full = tensor_power_decompose(_query([1], m, n))
                for nu in partitions_of_weight(n, m):
                    with self.subTest(m=m, N=n, nu=str(nu)):
                        self.assertIn(nu, full)

    def test_trivial_component_of_three_traps(self) -> None:
        full = tensor_power_decompose(_query([2], 3, 3))
        self.assertEqual(1, full.multiplicity(Partition((2, 2, 2))))
        self.assertEqual(6**3, full.total_dim(3))

    def test_cap_on_intermediate_diagrams(self) -> None:
        with self.assertRaises(ResourceBound):
            tensor_power_decompose(_query([1], 3, 4), cap=2)
