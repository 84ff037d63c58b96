#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from typing import Iterator, Mapping

from forge_utils.errors import TooManyRows
from lrcalc.filling import LabeledDiagram
from young import (
    Partition,
    PartitionLike,
    as_partition,
    contains,
    irrep_dim,
    make_partition,
    reduce_mod,
)

# per label, the number of its boxes appended to each row
Placement = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Decomposition:
    """Multiset of diagrams; iteration runs over shapes in descending lexicographic order."""

    entries: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        entries = {}
        items = ((as_partition(nu), int(mult)) for nu, mult in self.entries.items())
        for nu, mult in sorted(items, reverse=True):
            if mult < 0:
                raise ValueError(f"Negative multiplicity {mult} for {nu}")
            if mult:
                entries[nu] = mult
        object.__setattr__(self, "entries", entries)

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.entries.items())

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, nu: object) -> bool:
        return as_partition(nu) in self.entries  # type: ignore[arg-type]

    def multiplicity(self, nu: PartitionLike) -> int:
        return self.entries.get(as_partition(nu), 0)

    def total_dim(self, m: int) -> int:
        return sum(mult * irrep_dim(nu, m) for nu, mult in self)

    def reduced(self, m: int) -> "Decomposition":
        merged: Counter[Partition] = Counter()
        for nu, mult in self:
            merged[reduce_mod(nu, m)] += mult
        return Decomposition(merged)

    def to_json(self) -> dict[str, str]:
        return {nu.label: str(mult) for nu, mult in self}

    def to_plain(self) -> dict[str, int]:
        return {nu.label: mult for nu, mult in self}


def _check_rows(m: int | None, *diagrams: Partition) -> None:
    if m is None:
        return
    for lam in diagrams:
        if len(lam) > m:
            raise TooManyRows(f"{lam} has more than {m} rows")


def _column_counting_ok(
    intervals: list[tuple[int, int]], previous: list[tuple[int, int]], width: int
) -> bool:
    """Label t never outnumbers label t-1 in the rightmost c columns, for every c."""
    per_column_new = Counter(c for start, end in intervals for c in range(start, end + 1))
    per_column_old = Counter(c for start, end in previous for c in range(start, end + 1))
    newer, older = 0, 0
    for col in range(width, 0, -1):
        newer += per_column_new[col]
        older += per_column_old[col]
        if newer > older:
            return False
    return True


def _placements(
    lam: Partition, eta: Partition, max_rows: int, bound: tuple[int, ...] | None
) -> Iterator[tuple[tuple[int, ...], Placement]]:
    """Yields (final row lengths, placement) for every filling passing conditions 1-5."""
    labels = len(eta)

    def strips(
        t: int, before: tuple[int, ...], previous: tuple[int, ...] | None
    ) -> Iterator[tuple[int, ...]]:
        def rec(
            r: int, remaining: int, seen_t: int, seen_prev: int, acc: tuple[int, ...]
        ) -> Iterator[tuple[int, ...]]:
            if remaining == 0:
                yield acc + (0,) * (max_rows - r)
                return
            if r == max_rows:
                return
            cap = remaining if r == 0 else min(remaining, before[r - 1] - before[r])
            if bound is not None:
                cap = min(cap, bound[r] - before[r])
            if previous is not None:
                seen_prev += previous[r]
                cap = min(cap, seen_prev - seen_t)
            for a in range(max(cap, 0), -1, -1):
                yield from rec(r + 1, remaining - a, seen_t + a, seen_prev, acc + (a,))

        yield from rec(0, eta[t - 1], 0, 0, ())

    def place(
        t: int,
        lengths: tuple[int, ...],
        placement: Placement,
        previous_intervals: list[tuple[int, int]],
    ) -> Iterator[tuple[tuple[int, ...], Placement]]:
        if t > labels:
            yield lengths, placement
            return
        previous = placement[-1] if placement else None
        for strip in strips(t, lengths, previous):
            new_lengths = tuple(x + a for x, a in zip(lengths, strip))
            intervals = [
                (lengths[r] + 1, new_lengths[r]) for r in range(max_rows) if strip[r]
            ]
            if previous is not None and not _column_counting_ok(
                intervals, previous_intervals, max(new_lengths)
            ):
                continue
            yield from place(t + 1, new_lengths, (*placement, strip), intervals)

    yield from place(1, lam.padded(max_rows), (), [])


def _row_limit(
    lam: Partition, eta: Partition, m: int | None, within: Partition | None
) -> int:
    max_rows = len(lam) + len(eta) if m is None else m
    if within is not None:
        max_rows = min(max_rows, len(within))
    return max_rows


def _iter_placements(
    lam: Partition, eta: Partition, m: int | None, within: Partition | None
) -> Iterator[tuple[tuple[int, ...], Placement]]:
    max_rows = _row_limit(lam, eta, m, within)
    if len(lam) > max_rows or (within is not None and not contains(within, lam)):
        return
    bound = within.padded(max_rows) if within is not None else None
    yield from _placements(lam, eta, max_rows, bound)


def enumerate_lr_fillings(
    lam: PartitionLike,
    eta: PartitionLike,
    m: int | None,
    *,
    within: PartitionLike | None = None,
) -> list[LabeledDiagram]:
    """All valid expansions of lam by eta; m=None disables the row bound."""
    lam, eta = as_partition(lam), as_partition(eta)
    within = as_partition(within) if within is not None else None
    _check_rows(m, lam, eta)

    fillings = []
    for lengths, placement in _iter_placements(lam, eta, m, within):
        n_rows = max(len(lam), sum(1 for x in lengths if x))
        labels = tuple(
            tuple(t for t, strip in enumerate(placement, start=1) for _ in range(strip[r]))
            for r in range(n_rows)
        )
        fillings.append(LabeledDiagram(lam, labels))

    fillings.sort(key=lambda f: f.labels)
    fillings.sort(key=lambda f: f.shape, reverse=True)
    return fillings


@cache
def _histogram(
    lam: Partition, eta: Partition, m: int | None, within: Partition | None
) -> tuple[tuple[Partition, int], ...]:
    counts: Counter[Partition] = Counter(
        make_partition(lengths)
        for lengths, _ in _iter_placements(lam, eta, m, within)
    )
    return tuple(counts.items())


def lr_expand(
    lam: PartitionLike,
    eta: PartitionLike,
    m: int | None,
    *,
    within: PartitionLike | None = None,
) -> Decomposition:
    lam, eta = as_partition(lam), as_partition(eta)
    within = as_partition(within) if within is not None else None
    _check_rows(m, lam, eta)
    return Decomposition(dict(_histogram(lam, eta, m, within)))


def lr_coefficient(lam: PartitionLike, eta: PartitionLike, nu: PartitionLike) -> int:
    lam, eta, nu = as_partition(lam), as_partition(eta), as_partition(nu)
    if nu.weight != lam.weight + eta.weight or not contains(nu, lam):
        return 0
    return dict(_histogram(lam, eta, None, nu)).get(nu, 0)
