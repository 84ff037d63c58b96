#!/usr/bin/env python3
# www.jrodal.com

from powerdecomp.catalan import (
    catalan_multidim,
    dyck_sequence_count,
    dyck_sequences,
    su2_singlet_multiplicity,
)
from powerdecomp.power import (
    Method,
    PowerQuery,
    fulton_staircase,
    necessary_condition,
    tensor_power_decompose,
    trivial_multiplicity,
)

__all__ = [
    "Method",
    "PowerQuery",
    "catalan_multidim",
    "dyck_sequence_count",
    "dyck_sequences",
    "fulton_staircase",
    "necessary_condition",
    "su2_singlet_multiplicity",
    "tensor_power_decompose",
    "trivial_multiplicity",
]
