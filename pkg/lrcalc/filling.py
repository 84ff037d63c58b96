#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from young import Partition, PartitionLike, as_partition, make_partition, render_ascii


@dataclass(frozen=True)
class LabeledDiagram:
    """A diagram expansion: `base` plus, per row, the labels appended left to right."""

    base: Partition
    labels: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        labels = tuple(tuple(row) for row in self.labels)
        object.__setattr__(self, "labels", labels)
        for row in labels:
            for label in row:
                if label < 1:
                    raise ValueError(f"Labels start at 1, got {label} in {labels}")

    @classmethod
    def from_counts(
        cls, base: PartitionLike, counts: Sequence[dict[int, int]]
    ) -> "LabeledDiagram":
        """`counts[r][t]` boxes labelled t go to row r + 1, smaller labels first."""
        return cls(
            as_partition(base),
            tuple(
                tuple(label for label in sorted(row) for _ in range(row[label]))
                for row in counts
            ),
        )

    @property
    def n_rows(self) -> int:
        return max(len(self.base), len(self.labels))

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(
            self.base.part(r + 1) + (len(self.labels[r]) if r < len(self.labels) else 0)
            for r in range(self.n_rows)
        )

    @property
    def rows(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        return tuple(
            (length, self.labels[r] if r < len(self.labels) else ())
            for r, length in enumerate(self.row_lengths)
        )

    @property
    def shape(self) -> Partition:
        return make_partition(self.row_lengths)

    @property
    def max_label(self) -> int:
        return max((label for row in self.labels for label in row), default=0)

    def appended_cells(self) -> Iterator[tuple[int, int, int]]:
        """(row, column, label), both coordinates counted from 1."""
        for r, row in enumerate(self.labels, start=1):
            for offset, label in enumerate(row, start=1):
                yield r, self.base.part(r) + offset, label

    def count(self, label: int) -> int:
        return sum(row.count(label) for row in self.labels)

    def render(self) -> str:
        return render_ascii(self)

    def to_plain(self) -> dict:
        return {
            "base": self.base.to_plain(),
            "rows": [
                {"row": r, "length": length, "labels": list(labels)}
                for r, (length, labels) in enumerate(self.rows, start=1)
            ],
        }


@dataclass(frozen=True)
class FillingReport:
    shape: bool
    columns: bool
    row_counting: bool
    column_counting: bool
    row_bound: bool
    details: tuple[str, ...] = field(default=(), compare=False)

    @property
    def valid(self) -> bool:
        return all(self.conditions)

    @property
    def conditions(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.shape,
            self.columns,
            self.row_counting,
            self.column_counting,
            self.row_bound,
        )

    @property
    def failed(self) -> list[int]:
        return [i for i, ok in enumerate(self.conditions, start=1) if not ok]

    def to_plain(self) -> list[bool]:
        return list(self.conditions)


def _non_increasing(lengths: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(lengths, lengths[1:]))


def _dominated(counts: dict[int, int], max_label: int) -> bool:
    # for n < m: #m <= #n; consecutive labels suffice
    return all(counts.get(t, 0) <= counts.get(t - 1, 0) for t in range(2, max_label + 1))


def _check_shape(f: LabeledDiagram, details: list[str]) -> bool:
    for r, row in enumerate(f.labels, start=1):
        if list(row) != sorted(row):
            details.append(f"row {r} labels {row} are not weakly increasing")
            return False
    for t in range(1, f.max_label + 1):
        lengths = [
            f.base.part(r + 1)
            + (sum(1 for label in f.labels[r] if label <= t) if r < len(f.labels) else 0)
            for r in range(f.n_rows)
        ]
        if not _non_increasing(lengths):
            details.append(f"rows {lengths} after label {t} are not a Young diagram")
            return False
    if not _non_increasing(f.row_lengths):
        details.append(f"rows {f.row_lengths} are not non-increasing")
        return False
    return True


def _check_columns(f: LabeledDiagram, details: list[str]) -> bool:
    seen: dict[int, set[int]] = defaultdict(set)
    for r, c, label in f.appended_cells():
        if label in seen[c]:
            details.append(f"column {c} holds label {label} twice")
            return False
        seen[c].add(label)
    return True


def _check_row_counting(f: LabeledDiagram, details: list[str]) -> bool:
    counts: Counter[int] = Counter()
    for r, row in enumerate(f.labels, start=1):
        counts.update(row)
        if not _dominated(counts, f.max_label):
            details.append(f"label counts {dict(counts)} in rows 1..{r} break dominance")
            return False
    return True


def _check_column_counting(f: LabeledDiagram, details: list[str]) -> bool:
    width = max(f.row_lengths, default=0)
    by_column: dict[int, Counter[int]] = defaultdict(Counter)
    for _, c, label in f.appended_cells():
        by_column[c][label] += 1
    counts: Counter[int] = Counter()
    # columns numbered from the right edge of the expanded diagram
    for c, column in enumerate(range(width, 0, -1), start=1):
        counts.update(by_column[column])
        if not _dominated(counts, f.max_label):
            details.append(f"label counts {dict(counts)} in columns 1..{c} from the right break dominance")
            return False
    return True


def validate_filling(f: LabeledDiagram, m: int | None) -> FillingReport:
    """Checks the five expansion conditions independently; m=None drops the row bound."""
    details: list[str] = []
    n_rows = sum(1 for length in f.row_lengths if length)
    row_bound = m is None or n_rows <= m
    if not row_bound:
        details.append(f"{n_rows} rows exceed the bound {m}")
    return FillingReport(
        shape=_check_shape(f, details),
        columns=_check_columns(f, details),
        row_counting=_check_row_counting(f, details),
        column_counting=_check_column_counting(f, details),
        row_bound=row_bound,
        details=tuple(details),
    )


def lattice_word_ok(f: LabeledDiagram) -> bool:
    """Reverse reading word (rows top to bottom, right to left) is a lattice word."""
    counts: Counter[int] = Counter()
    for row in f.labels:
        for label in reversed(row):
            counts[label] += 1
            if label > 1 and counts[label] > counts[label - 1]:
                return False
    return True

