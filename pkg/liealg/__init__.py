#!/usr/bin/env python3
# www.jrodal.com

from liealg.kernel import (
    KernelSystem,
    diagonal_weights,
    kernel_dimension,
    span_rank,
    trivial_subspace,
    zero_weight_columns,
)
from liealg.operators import (
    Group,
    I,
    ONE,
    ZERO,
    SparseOperator,
    bosonic_generator_ops,
    commutator,
    diagonal_action,
    generators,
    gaussian,
    hopping,
    linear_index,
    monomial_norms,
    occupation_basis,
    so_simple_root_ops,
    so_weight_basis,
    so_weight_norms,
    su_full_ops,
    su_simple_root_ops,
)
from liealg.states import (
    StateVector,
    annihilated_by,
    antisym_state,
    apply_diagonal,
    basis_state,
    format_rational,
    is_lme,
    reduced_density,
    so_n4_states,
    trap_boson_state,
)

__all__ = [
    "Group",
    "I",
    "KernelSystem",
    "ONE",
    "SparseOperator",
    "StateVector",
    "ZERO",
    "annihilated_by",
    "antisym_state",
    "apply_diagonal",
    "basis_state",
    "bosonic_generator_ops",
    "commutator",
    "diagonal_action",
    "diagonal_weights",
    "format_rational",
    "gaussian",
    "generators",
    "hopping",
    "is_lme",
    "kernel_dimension",
    "linear_index",
    "monomial_norms",
    "occupation_basis",
    "reduced_density",
    "so_n4_states",
    "so_simple_root_ops",
    "so_weight_basis",
    "so_weight_norms",
    "span_rank",
    "su_full_ops",
    "su_simple_root_ops",
    "trap_boson_state",
    "trivial_subspace",
    "zero_weight_columns",
]
