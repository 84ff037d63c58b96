#!/usr/bin/env python3
# www.jrodal.com

from reports.parallel import run_parallel
from reports.sweeps import (
    PairingSpan,
    SweepFailure,
    SweepReport,
    acceptance_theorem_cases,
    catalan_sweep,
    check_catalan,
    check_kernel_route,
    check_lr_pair,
    check_theorem_case,
    kernel_route_sweep,
    lr_oracle_sweep,
    pairing_report,
    pairing_span,
    random_theorem_cases,
    theorem_cases,
    theorem_sweep,
)
from reports.tables import (
    TABLE_RANGES,
    Cell,
    MultiplicityTable,
    build_table,
    load_printed,
    table_1_cell,
    table_2_cell,
)

__all__ = [
    "TABLE_RANGES",
    "Cell",
    "MultiplicityTable",
    "PairingSpan",
    "SweepFailure",
    "SweepReport",
    "acceptance_theorem_cases",
    "build_table",
    "catalan_sweep",
    "check_catalan",
    "check_kernel_route",
    "check_lr_pair",
    "check_theorem_case",
    "kernel_route_sweep",
    "load_printed",
    "lr_oracle_sweep",
    "pairing_report",
    "pairing_span",
    "random_theorem_cases",
    "run_parallel",
    "table_1_cell",
    "table_2_cell",
    "theorem_cases",
    "theorem_sweep",
]
