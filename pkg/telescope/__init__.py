#!/usr/bin/env python3
# www.jrodal.com

from telescope.plan import (
    DeltaTable,
    ExpansionPlan,
    LabelBlock,
    PlanStep,
    VerificationReport,
    build_expansion_plan,
    delta,
    execute_plan,
    simulate_row_lengths,
    small_delta,
    verify_conditions,
)
from telescope.telescope import (
    PIECEWISE_FORMULAS,
    Telescope,
    beg_len_end,
    boxes_added,
    boxes_added_piecewise,
    piecewise_domain,
    telescope_entries,
    telescope_entry,
)

__all__ = [
    "DeltaTable",
    "ExpansionPlan",
    "LabelBlock",
    "PIECEWISE_FORMULAS",
    "PlanStep",
    "Telescope",
    "VerificationReport",
    "beg_len_end",
    "boxes_added",
    "boxes_added_piecewise",
    "build_expansion_plan",
    "delta",
    "execute_plan",
    "piecewise_domain",
    "simulate_row_lengths",
    "small_delta",
    "telescope_entries",
    "telescope_entry",
    "verify_conditions",
]
