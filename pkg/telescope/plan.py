#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterator

from forge_utils.errors import ConditionViolation, IndexOutOfRange, TooManyRows
from lrcalc import LabeledDiagram, validate_filling
from telescope.telescope import beg_len_end, boxes_added
from young import Partition, PartitionLike, as_partition, make_partition


@dataclass(frozen=True)
class LabelBlock:
    """The telescope of one label inside one step, as per-row box counts."""

    label: int
    beg: int
    length: int
    counts: tuple[int, ...]

    @property
    def end(self) -> int:
        return self.beg + self.length - 1

    def rows(self) -> Iterator[tuple[int, int]]:
        return zip(range(self.beg, self.end + 1), self.counts)

    def to_plain(self) -> dict:
        return {
            "label": self.label,
            "rows": [{"row": row, "count": count} for row, count in self.rows()],
        }


@dataclass(frozen=True)
class PlanStep:
    step: int
    blocks: tuple[LabelBlock, ...]

    def counts_by_row(self, n_rows: int) -> list[dict[int, int]]:
        counts: list[dict[int, int]] = [defaultdict(int) for _ in range(n_rows)]
        for block in self.blocks:
            for row, count in block.rows():
                if count:
                    counts[row - 1][block.label] += count
        return [dict(row) for row in counts]


@dataclass(frozen=True)
class ExpansionPlan:
    n_parties: int
    lam: Partition
    steps: tuple[PlanStep, ...]

    @property
    def target(self) -> Partition:
        return make_partition([self.lam.weight] * self.n_parties)

    def to_plain(self) -> list[dict]:
        return [
            {"step": step.step, **block.to_plain()}
            for step in self.steps
            for block in step.blocks
        ]


def build_expansion_plan(lam: PartitionLike, n_parties: int) -> ExpansionPlan:
    lam = as_partition(lam)
    if n_parties < 1:
        raise ValueError(f"N must be positive, got {n_parties}")
    if len(lam) > n_parties - 1:
        raise TooManyRows(f"{lam} needs at most {n_parties - 1} rows for N={n_parties}")
    steps = []
    for k in range(1, n_parties + 1):
        blocks = []
        for m in range(1, n_parties):
            beg, length, end = beg_len_end(m, k, n_parties)
            counts = tuple(boxes_added(m, k, i, lam, n_parties) for i in range(beg, end + 1))
            blocks.append(LabelBlock(m, beg, length, counts))
        steps.append(PlanStep(k, tuple(blocks)))
    return ExpansionPlan(n_parties, lam, tuple(steps))


def _apply(lengths: tuple[int, ...], step: PlanStep) -> LabeledDiagram:
    return LabeledDiagram.from_counts(
        make_partition(lengths), step.counts_by_row(len(lengths))
    )


def execute_plan(plan: ExpansionPlan) -> tuple[Partition, list[LabeledDiagram]]:
    """Runs the plan from the empty diagram; every step must be a valid expansion."""
    lengths = (0,) * plan.n_parties
    trace = []
    for step in plan.steps:
        filling = _apply(lengths, step)
        report = validate_filling(filling, plan.n_parties)
        if not report.valid:
            raise ConditionViolation(step.step, report.failed[0], "; ".join(report.details))
        lengths = filling.row_lengths
        trace.append(filling)
    final = make_partition(lengths)
    if final != plan.target:
        raise ConditionViolation(
            plan.n_parties, 5, f"final shape {final} is not the rectangle {plan.target}"
        )
    return final, trace


def simulate_row_lengths(plan: ExpansionPlan) -> list[tuple[int, ...]]:
    """Row lengths after 0, 1, ..., N steps, without validating anything."""
    lengths = (0,) * plan.n_parties
    history = [lengths]
    for step in plan.steps:
        added = step.counts_by_row(plan.n_parties)
        lengths = tuple(length + sum(row.values()) for length, row in zip(lengths, added))
        history.append(lengths)
    return history


def _check_row_step(i: int, k: int, n_parties: int) -> None:
    if not (1 <= i <= n_parties - 1 and 1 <= k <= n_parties):
        raise IndexOutOfRange(
            f"Need 1 <= i <= {n_parties - 1} and 1 <= k <= {n_parties}, got i={i}, k={k}"
        )


def delta(i: int, k: int, lam: PartitionLike, n_parties: int) -> int:
    """Length of row i minus row i+1 after steps 1..k-1."""
    _check_row_step(i, k, n_parties)
    lam = as_partition(lam)
    return sum(
        boxes_added(n, s, i, lam, n_parties) - boxes_added(n, s, i + 1, lam, n_parties)
        for n in range(1, i + 2)
        for s in range(1, k)
    )


def small_delta(i: int, k: int, m: int, lam: PartitionLike, n_parties: int) -> int:
    """Boxes labelled up to m in row i+1 minus boxes labelled below m in row i, step k."""
    _check_row_step(i, k, n_parties)
    if not 1 <= m <= n_parties - 1:
        raise IndexOutOfRange(f"Need 1 <= m <= {n_parties - 1}, got m={m}")
    lam = as_partition(lam)
    below = sum(boxes_added(n, k, i + 1, lam, n_parties) for n in range(1, m + 1))
    above = sum(boxes_added(n, k, i, lam, n_parties) for n in range(1, m))
    return below - above


@dataclass(frozen=True)
class DeltaTable:
    n_parties: int
    lam: Partition
    deltas: dict[tuple[int, int], int] = field(compare=False)
    small_deltas: dict[tuple[int, int, int], int] = field(compare=False)

    @classmethod
    def of(cls, lam: PartitionLike, n_parties: int) -> "DeltaTable":
        lam = as_partition(lam)
        rows, steps = range(1, n_parties), range(1, n_parties + 1)
        return cls(
            n_parties,
            lam,
            {(i, k): delta(i, k, lam, n_parties) for i in rows for k in steps},
            {
                (i, k, m): small_delta(i, k, m, lam, n_parties)
                for i in rows
                for k in steps
                for m in rows
            },
        )

    def failures(self) -> Iterator[tuple[str, tuple[int, ...]]]:
        for (i, k), value in self.deltas.items():
            if value < 0:
                yield "delta-negative", (i, k)
        for (i, k, m), value in self.small_deltas.items():
            if self.deltas[i, k] < value:
                yield "delta-below-small-delta", (i, k, m)


@dataclass(frozen=True)
class VerificationReport:
    lam: Partition
    n_parties: int
    failures: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_plain(self) -> dict:
        return {
            "lambda": self.lam.to_plain(),
            "N": self.n_parties,
            "ok": self.ok,
            "failures": [{"kind": kind, "indices": list(ix)} for kind, ix in self.failures],
        }


def verify_conditions(lam: PartitionLike, n_parties: int) -> VerificationReport:
    plan = build_expansion_plan(lam, n_parties)
    failures: list[tuple[str, tuple[int, ...]]] = list(
        DeltaTable.of(plan.lam, n_parties).failures()
    )

    lengths = (0,) * n_parties
    for step in plan.steps:
        filling = _apply(lengths, step)
        report = validate_filling(filling, n_parties)
        if not report.row_counting:
            failures.append(("row-counting", (step.step,)))
        if not report.column_counting:
            failures.append(("column-counting", (step.step,)))
        if not (report.shape and report.columns):
            failures.append(("shape", (step.step,)))
        lengths = filling.row_lengths
    if make_partition(lengths) != plan.target:
        failures.append(("final-shape", (n_parties,)))
    return VerificationReport(plan.lam, n_parties, tuple(failures))
