#!/usr/bin/env python3
# www.jrodal.com

import os
import unittest

from sympy.polys.domains import QQ

from forge_utils.errors import ResourceBound, ZeroState
from forge_utils.manifest_test_case import ManifestTestCase
from liealg import (
    ONE,
    ZERO,
    SparseOperator,
    StateVector,
    annihilated_by,
    antisym_state,
    basis_state,
    bosonic_generator_ops,
    commutator,
    diagonal_action,
    gaussian,
    generators,
    hopping,
    is_lme,
    kernel_dimension,
    monomial_norms,
    occupation_basis,
    reduced_density,
    so_n4_states,
    so_simple_root_ops,
    so_weight_basis,
    so_weight_norms,
    span_rank,
    su_full_ops,
    su_simple_root_ops,
    trap_boson_state,
    trivial_subspace,
)
from powerdecomp import PowerQuery, su2_singlet_multiplicity, trivial_multiplicity


def _kernel_dimension(group, d, n, bosons=1, weight_basis=False):
    return kernel_dimension(generators(group, d, bosons=bosons, weight_basis=weight_basis), n)


def _diag(*values):
    d = len(values)
    return [[gaussian(values[s]) if s == t else ZERO for t in range(d)] for s in range(d)]


class LieAlgManifestTests(ManifestTestCase):
    _OPERATIONS = {
        "kernel_dimension": _kernel_dimension,
        "operator_count": lambda group, d: len(generators(group, d)),
        "local_dimension": lambda m, n: len(occupation_basis(m, n)),
        "antisym_state": antisym_state,
    }
    _MANIFEST_PATH = os.path.join(os.path.dirname(__file__), "test_manifest.yml")


class OperatorTests(unittest.TestCase):
    def test_su_qubit_ops(self) -> None:
        raising, lowering = su_simple_root_ops(2)
        self.assertEqual({(0, 1): ONE}, raising.entries)
        self.assertEqual({(1, 0): ONE}, lowering.entries)

    def test_su_ops_are_matrix_units(self) -> None:
        for op in su_simple_root_ops(5):
            self.assertEqual(1, op.nnz)

    def test_su_commutators_are_traceless_diagonals(self) -> None:
        ops = su_simple_root_ops(4)
        for raising, lowering in zip(ops[::2], ops[1::2]):
            h = commutator(raising, lowering)
            self.assertTrue(h.is_diagonal())
            self.assertEqual(ZERO, sum(h.diagonal(), ZERO))
            self.assertTrue(all(v.y == 0 and v.x.denominator == 1 for v in h.diagonal()))

    def test_so_ops_are_antisymmetric(self) -> None:
        for d in range(3, 9):
            for op in so_simple_root_ops(d):
                with self.subTest(d=d):
                    self.assertEqual(-op, op.transpose())

    def test_so_weight_basis_diagonalises_commutators(self) -> None:
        for d in range(3, 9):
            ops = so_simple_root_ops(d, weight_basis=True)
            for raising, lowering in zip(ops[::2], ops[1::2]):
                with self.subTest(d=d):
                    h = commutator(raising, lowering)
                    self.assertTrue(h.is_diagonal())
                    self.assertGreater(h.nnz, 0)

    def test_so_weight_norms_match_columns(self) -> None:
        for d in range(3, 8):
            _, from_weight = so_weight_basis(d)
            columns = [
                sum((v.x**2 + v.y**2 for (_, c), v in from_weight.entries.items() if c == s), QQ(0))
                for s in range(d)
            ]
            with self.subTest(d=d):
                self.assertEqual(list(so_weight_norms(d)), columns)

    def test_bosons_reduce_to_natural_rep(self) -> None:
        self.assertEqual(su_simple_root_ops(2), bosonic_generator_ops(2, 1))
        self.assertEqual(su_simple_root_ops(3), bosonic_generator_ops(3, 1))

    def test_hopping_uses_monomial_factors(self) -> None:
        basis = occupation_basis(3, 2)
        op = hopping(3, 2, 0, 1)
        # a^+ b on b^+^2|0> gives 2 a^+ b^+|0>
        self.assertEqual(
            gaussian(2), op.entries[basis.index((1, 1, 0)), basis.index((0, 2, 0))]
        )
        self.assertEqual(6, op.dim)
        self.assertEqual((QQ(2), QQ(1)), monomial_norms(3, 2)[:2])

    def test_diagonal_action_single_party(self) -> None:
        op = su_simple_root_ops(3)[0]
        self.assertEqual(op, diagonal_action(op, 1))

    def test_diagonal_action_of_identity(self) -> None:
        for n in range(1, 5):
            self.assertEqual(
                n * SparseOperator.identity(2**n), diagonal_action(SparseOperator.identity(2), n)
            )

    def test_diagonal_action_two_qubits(self) -> None:
        lifted = diagonal_action(SparseOperator.unit(2, 0, 1), 2)
        self.assertEqual(4, lifted.dim)
        self.assertEqual({(0, 1), (0, 2), (1, 3), (2, 3)}, set(lifted.entries))

    def test_diagonal_action_is_linear(self) -> None:
        a, b = so_simple_root_ops(4)[:2]
        self.assertEqual(
            diagonal_action(a, 3) + diagonal_action(b, 3), diagonal_action(a + b, 3)
        )

    def test_diagonal_action_cap(self) -> None:
        with self.assertRaises(ResourceBound):
            diagonal_action(SparseOperator.identity(3), 5, cap=100)


class StateTests(unittest.TestCase):
    def test_singlet_density(self) -> None:
        singlet = antisym_state(2, 1)
        self.assertEqual(_diag(QQ(1, 2), QQ(1, 2)), reduced_density(singlet, 1))
        self.assertTrue(is_lme(singlet))

    def test_product_state_density(self) -> None:
        state = basis_state(2, (0, 0))
        self.assertEqual(_diag(1, 0), reduced_density(state, 1))
        self.assertFalse(is_lme(state))

    def test_zero_state(self) -> None:
        with self.assertRaises(ZeroState):
            reduced_density(StateVector(2, 2), 1)

    def test_antisymmetric_states_are_invariant(self) -> None:
        for d, k in [(2, 1), (3, 1), (2, 2), (4, 1), (3, 2)]:
            state = antisym_state(d, k, k * d)
            with self.subTest(d=d, k=k):
                self.assertTrue(annihilated_by(su_simple_root_ops(d), state))
                self.assertTrue(is_lme(state))

    def test_trap_boson_state(self) -> None:
        state = trap_boson_state()
        self.assertEqual(QQ(18), state.norm2)
        every_hopping = [hopping(3, 2, a, b) for a in range(3) for b in range(3) if a != b]
        self.assertTrue(annihilated_by(every_hopping, state))
        for party in (1, 2, 3):
            self.assertEqual(_diag(*[QQ(1, 6)] * 6), reduced_density(state, party))

    def test_trap_boson_state_spans_kernel(self) -> None:
        (kernel,) = trivial_subspace(
            bosonic_generator_ops(3, 2), 3, basis_norms=monomial_norms(3, 2)
        )
        self.assertEqual(1, span_rank([kernel, trap_boson_state()]))
        self.assertTrue(is_lme(kernel))

    def test_boson_density_on_monomial_basis(self) -> None:
        norms = monomial_norms(3, 2)
        state = StateVector(6, 2, {(0, 1): 1, (1, 0): 1, (1, 1): 1}, norms)
        rho = reduced_density(state, 1)
        self.assertEqual((gaussian(QQ(2, 5)), gaussian(QQ(1, 5))), (rho[0][0], rho[0][1]))
        self.assertEqual((gaussian(QQ(2, 5)), gaussian(QQ(3, 5))), (rho[1][0], rho[1][1]))
        self.assertNotEqual(rho[0][1], rho[1][0])
        self.assertEqual(ONE, sum((rho[s][s] for s in range(6)), ZERO))
        for s in range(6):
            for t in range(6):
                with self.subTest(s=s, t=t):
                    left = rho[s][t] * gaussian(1 / norms[t])
                    right = rho[t][s] * gaussian(1 / norms[s])
                    self.assertEqual((left.x, left.y), (right.x, -right.y))

    def test_so_pairings_are_invariant(self) -> None:
        for d in range(3, 7):
            states = so_n4_states(d)
            with self.subTest(d=d):
                for state in states:
                    self.assertTrue(annihilated_by(so_simple_root_ops(d), state))
                self.assertEqual(3, span_rank(list(states)))

    def test_so_pairings_span_kernel_for_d5(self) -> None:
        kernel = trivial_subspace(so_simple_root_ops(5), 4)
        self.assertEqual(3, len(kernel))
        self.assertEqual(3, span_rank(kernel + list(so_n4_states(5))))

    def test_so_pairings_miss_part_of_the_d4_kernel(self) -> None:
        kernel = trivial_subspace(so_simple_root_ops(4), 4)
        self.assertEqual(4, len(kernel))
        self.assertEqual(4, span_rank(kernel + list(so_n4_states(4))))


class KernelTests(unittest.TestCase):
    def test_singlet_basis_is_reduced_echelon(self) -> None:
        (singlet,) = trivial_subspace(su_simple_root_ops(2), 2)
        self.assertEqual({(0, 1): -ONE, (1, 0): ONE}, singlet.amplitudes)

    def test_matches_tensor_power_multiplicity(self) -> None:
        for d in range(2, 5):
            for n in range(1, 7):
                if d**n > 4096:
                    continue
                with self.subTest(d=d, N=n):
                    self.assertEqual(
                        trivial_multiplicity(PowerQuery.of((1,), d, n)),
                        kernel_dimension(su_simple_root_ops(d), n),
                    )
        self.assertEqual(
            trivial_multiplicity(PowerQuery.of((2,), 3, 3)),
            kernel_dimension(bosonic_generator_ops(3, 2), 3),
        )

    def test_symmetric_power_embedding(self) -> None:
        for d in range(2, 5):
            for n in range(1, 7):
                if d**n > 4096:
                    continue
                with self.subTest(d=d, N=n):
                    self.assertEqual(
                        su2_singlet_multiplicity(d, n),
                        kernel_dimension(bosonic_generator_ops(2, d - 1), n),
                    )

    def test_full_generators_give_same_kernel(self) -> None:
        for d, n in [(2, 4), (3, 3), (2, 2)]:
            with self.subTest(d=d, N=n):
                self.assertEqual(
                    trivial_subspace(su_simple_root_ops(d), n),
                    trivial_subspace(su_full_ops(d), n),
                )

    def test_weight_filter_is_exact(self) -> None:
        for gens, n in [
            (su_simple_root_ops(2), 4),
            (su_simple_root_ops(3), 3),
            (bosonic_generator_ops(3, 2), 3),
        ]:
            self.assertEqual(
                trivial_subspace(gens, n, weight_filter=False),
                trivial_subspace(gens, n),
            )

    def test_so_weight_basis_keeps_dimension(self) -> None:
        for d, n in [(3, 2), (3, 3), (3, 4), (3, 5), (4, 2), (4, 3), (4, 4), (5, 3)]:
            with self.subTest(d=d, N=n):
                self.assertEqual(
                    kernel_dimension(so_simple_root_ops(d), n),
                    kernel_dimension(so_simple_root_ops(d, weight_basis=True), n),
                )

    def test_kernel_vectors_are_lme(self) -> None:
        cases = [
            (su_simple_root_ops(2), 4, None),
            (su_simple_root_ops(3), 3, None),
            (so_simple_root_ops(3), 4, None),
            (so_simple_root_ops(4), 4, None),
            (bosonic_generator_ops(2, 2), 4, monomial_norms(2, 2)),
        ]
        for gens, n, norms in cases:
            for state in trivial_subspace(gens, n, basis_norms=norms):
                with self.subTest(d=gens[0].dim, N=n):
                    self.assertTrue(annihilated_by(gens, state))
                    self.assertTrue(is_lme(state))

    def test_so_kernels_are_lme_up_to_table_bounds(self) -> None:
        # kernel dimensions for N = 2, 3, ...
        expected = {
            3: [1, 1, 3, 6, 15, 36, 91],
            4: [1, 0, 4, 0, 25],
            5: [1, 0, 3, 1],
            6: [1, 0, 3, 0],
            7: [1, 0, 3, 0],
        }
        for d, dims in expected.items():
            gens = so_simple_root_ops(d, weight_basis=True)
            for n, dim in enumerate(dims, start=2):
                states = trivial_subspace(gens, n, basis_norms=so_weight_norms(d))
                with self.subTest(d=d, N=n):
                    self.assertEqual(dim, len(states))
                    for state in states:
                        self.assertTrue(is_lme(state))

    def test_even_so_odd_parties_vanish(self) -> None:
        for d, n in [(4, 3), (4, 5), (6, 3), (6, 5)]:
            with self.subTest(d=d, N=n):
                self.assertEqual(
                    0, kernel_dimension(so_simple_root_ops(d, weight_basis=True), n)
                )


if __name__ == "__main__":
    unittest.main()
