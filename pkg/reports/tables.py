#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

import os

from dataclasses import dataclass
from functools import cache
from typing import Any

import yaml

from rich.table import Table

from consts import DEFAULT_CAP_DIAGRAMS, DEFAULT_CAP_DIMS, DEFAULT_JOBS, SCHEMA
from forge_utils.errors import ResourceBound
from liealg import kernel_dimension, so_simple_root_ops
from powerdecomp import PowerQuery, catalan_multidim, su2_singlet_multiplicity, trivial_multiplicity
from reports.parallel import run_parallel

_PRINTED_PATH = os.path.join(os.path.dirname(__file__), "data", "printed_tables.yml")

TABLE_RANGES = {1: (range(2, 7), range(1, 13)), 2: (range(3, 8), range(1, 11))}


@cache
def load_printed() -> dict[str, Any]:
    with open(_PRINTED_PATH) as f:
        return yaml.safe_load(f)


@dataclass(frozen=True)
class Cell:
    d: int
    n_parties: int
    value: int | None
    method: str
    printed: int | None = None
    style: str = "r"
    catalan: int | None = None

    @property
    def misprint(self) -> bool:
        # one party carries the natural irrep, never the trivial one
        return self.n_parties == 1 and self.printed == 1 and self.value == 0

    @property
    def matches(self) -> bool | None:
        if self.value is None or self.printed is None:
            return None
        return self.value == self.printed

    @property
    def mismatch(self) -> bool:
        return self.matches is False and not self.misprint

    def with_printed(self, printed: int | None, style: str) -> "Cell":
        return Cell(self.d, self.n_parties, self.value, self.method, printed, style, self.catalan)

    def markup(self) -> str:
        if self.value is None:
            text = "[dim]unverified[/dim]"
            return f"{text} ({self.printed})" if self.printed is not None else text
        if self.misprint:
            return f"[yellow]{self.value}[/yellow] (printed {self.printed})"
        if self.mismatch:
            return f"[bold red]{self.value}[/bold red] (printed {self.printed})"
        match self.style:
            case "b":
                return f"[bold]{self.value}[/bold]"
            case "i":
                return f"[italic]{self.value}[/italic]"
        return str(self.value)

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "d": self.d,
            "N": self.n_parties,
            "value": None if self.value is None else str(self.value),
            "method": self.method,
            "printed": None if self.printed is None else str(self.printed),
            "style": self.style,
            "matches": self.matches,
        }
        if self.misprint:
            data["note"] = "single-party misprint"
        elif self.value is None:
            data["note"] = "unverified (external source)" if self.style == "b" else "unverified"
        if self.catalan is not None:
            data["catalan"] = str(self.catalan)
        return data

    def to_plain(self) -> dict[str, Any]:
        return {"d": self.d, "N": self.n_parties, "value": self.value, "method": self.method}


def table_1_cell(d: int, n_parties: int, cap_diagrams: int = DEFAULT_CAP_DIAGRAMS) -> Cell:
    catalan = catalan_multidim(d, n_parties // d) if n_parties % d == 0 else None
    try:
        value = trivial_multiplicity(PowerQuery.of((1,), d, n_parties), cap=cap_diagrams)
    except ResourceBound:
        return Cell(d, n_parties, None, "unverified", catalan=catalan)
    return Cell(d, n_parties, value, "lr", catalan=catalan)


def table_2_cell(d: int, n_parties: int, cap_dims: int = DEFAULT_CAP_DIMS) -> Cell:
    if d**n_parties <= cap_dims:
        gens = so_simple_root_ops(d, weight_basis=True)
        return Cell(d, n_parties, kernel_dimension(gens, n_parties, cap=cap_dims), "kernel")
    if d == 3:
        # so(3) on C^3 is the spin-1 representation of su(2)
        return Cell(d, n_parties, su2_singlet_multiplicity(3, n_parties), "spin")
    if d % 2 == 0 and n_parties % 2:
        # -1 lies in SO(d) for even d and acts as (-1)^N
        return Cell(d, n_parties, 0, "parity")
    return Cell(d, n_parties, None, "unverified")


@dataclass(frozen=True)
class MultiplicityTable:
    table_id: int
    title: str
    ds: tuple[int, ...]
    ns: tuple[int, ...]
    cells: tuple[Cell, ...]

    def cell(self, d: int, n_parties: int) -> Cell:
        for cell in self.cells:
            if (cell.d, cell.n_parties) == (d, n_parties):
                return cell
        raise KeyError(f"No cell for d={d}, N={n_parties} in table {self.table_id}")

    def row(self, d: int) -> list[int | None]:
        return [self.cell(d, n).value for n in self.ns]

    def mismatches(self) -> list[Cell]:
        return [cell for cell in self.cells if cell.mismatch]

    def misprints(self) -> list[Cell]:
        return [cell for cell in self.cells if cell.misprint]

    def unverified(self) -> list[Cell]:
        return [cell for cell in self.cells if cell.value is None]

    @property
    def ok(self) -> bool:
        return not self.mismatches()

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "table": self.table_id,
            "title": self.title,
            "cells": [cell.to_json() for cell in self.cells],
            "mismatches": len(self.mismatches()),
            "unverified": len(self.unverified()),
        }

    def render(self) -> Table:
        table = Table(title=self.title, show_header=True, header_style="bold magenta")
        table.add_column("d \\ N", justify="right")
        for n in self.ns:
            table.add_column(str(n), justify="right")
        for d in self.ds:
            table.add_row(str(d), *(self.cell(d, n).markup() for n in self.ns))
        return table


def _attach_printed(table_id: int, cells: list[Cell]) -> list[Cell]:
    printed = load_printed()[f"table_{table_id}"]
    attached = []
    for cell in cells:
        values = printed["rows"].get(cell.d, [])
        styles = printed.get("styles", {}).get(cell.d, [])
        j = cell.n_parties - 1
        attached.append(
            cell.with_printed(
                values[j] if j < len(values) else None,
                styles[j] if j < len(styles) else "r",
            )
        )
    return attached


def build_table(
    table_id: int,
    *,
    ds: range | None = None,
    ns: range | None = None,
    cap_dims: int = DEFAULT_CAP_DIMS,
    cap_diagrams: int = DEFAULT_CAP_DIAGRAMS,
    jobs: int = DEFAULT_JOBS,
    progress: bool = False,
) -> MultiplicityTable:
    if table_id not in TABLE_RANGES:
        raise ValueError(f"Unknown table {table_id}, expected one of {sorted(TABLE_RANGES)}")
    default_ds, default_ns = TABLE_RANGES[table_id]
    ds, ns = ds or default_ds, ns or default_ns
    match table_id:
        case 1:
            fn, cap = table_1_cell, cap_diagrams
        case _:
            fn, cap = table_2_cell, cap_dims
    items = [(d, n, cap) for d in ds for n in ns]
    cells = run_parallel(fn, items, jobs=jobs, progress=progress)
    return MultiplicityTable(
        table_id,
        load_printed()[f"table_{table_id}"]["title"],
        tuple(ds),
        tuple(ns),
        tuple(_attach_printed(table_id, cells)),
    )
