#!/usr/bin/env python3
# www.jrodal.com

from lrcalc.expand import (
    Decomposition,
    enumerate_lr_fillings,
    lr_coefficient,
    lr_expand,
)
from lrcalc.filling import (
    FillingReport,
    LabeledDiagram,
    lattice_word_ok,
    validate_filling,
)
from lrcalc.skew import lr_oracle_coefficient, lr_skew_coefficient

__all__ = [
    "Decomposition",
    "FillingReport",
    "LabeledDiagram",
    "enumerate_lr_fillings",
    "lattice_word_ok",
    "lr_coefficient",
    "lr_expand",
    "lr_oracle_coefficient",
    "lr_skew_coefficient",
    "validate_filling",
]
