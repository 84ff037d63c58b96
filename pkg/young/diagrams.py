#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from math import prod
from typing import Iterator, Protocol, Sequence

import numpy as np

from forge_utils.errors import TooManyRows
from forge_utils.grid import Grid
from young.partition import Partition, PartitionLike, as_partition

EMPTY_MARKER = "(empty)"


class Labeled(Protocol):
    base: Partition
    labels: tuple[tuple[int, ...], ...]


def transpose(lam: PartitionLike) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return lam
    return Partition(
        tuple(sum(1 for part in lam if part >= col) for col in range(1, lam[0] + 1))
    )


def weight(lam: PartitionLike) -> int:
    return as_partition(lam).weight


def _check_rows(lam: Partition, m: int) -> None:
    if len(lam) > m:
        raise TooManyRows(f"{lam} has {len(lam)} rows, SU({m}) allows at most {m}")


def irrep_dim(lam: PartitionLike, m: int) -> int:
    """Dimension of the SU(m) irrep via the hook-content formula."""
    lam = as_partition(lam)
    _check_rows(lam, m)
    columns = transpose(lam)
    numerator = prod(m + j - i for i, j in lam.cells())
    hooks = prod(lam.part(i) - j + columns.part(j) - i + 1 for i, j in lam.cells())
    return numerator // hooks


def is_trivial_for(lam: PartitionLike, m: int) -> bool:
    lam = as_partition(lam)
    return not lam or (len(lam) == m and lam[0] == lam[-1])


def reduce_mod(lam: PartitionLike, m: int) -> Partition:
    """Strips the full columns of height m."""
    lam = as_partition(lam)
    _check_rows(lam, m)
    full = lam.part(m)
    return Partition(tuple(p - full for p in lam if p > full))


def contains(outer: PartitionLike, inner: PartitionLike) -> bool:
    outer, inner = as_partition(outer), as_partition(inner)
    return len(inner) <= len(outer) and all(
        inner[i] <= outer[i] for i in range(len(inner))
    )


def partitions_in_box(max_rows: int, max_part: int) -> Iterator[Partition]:
    """Every partition fitting a max_rows x max_part box, descending lexicographically."""

    def rec(prefix: tuple[int, ...], bound: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) < max_rows:
            for part in range(bound, 0, -1):
                yield from rec((*prefix, part), part)
        yield prefix

    for parts in rec((), max_part):
        yield Partition(parts)


def partitions_of_weight(n: int, max_rows: int | None = None) -> Iterator[Partition]:
    def rec(remaining: int, bound: int, rows: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows == 0:
            return
        for part in range(min(bound, remaining), 0, -1):
            for rest in rec(remaining - part, part, rows - 1):
                yield (part, *rest)

    for parts in rec(n, n, n if max_rows is None else max_rows):
        yield Partition(parts)


def irreps_with_dim(dim: int, m: int, max_boxes: int) -> list[Partition]:
    """Nontrivial SU(m) irreps (reduced diagrams) of the given dimension with at most max_boxes boxes."""
    return [
        lam
        for n in range(1, max_boxes + 1)
        for lam in partitions_of_weight(n, m - 1)
        if irrep_dim(lam, m) == dim
    ]


def random_partitions(
    rng: np.random.Generator,
    count: int,
    max_rows: int,
    max_part: int,
    *,
    exact_rows: bool = False,
) -> list[Partition]:
    result = []
    for _ in range(count):
        n_rows = max_rows if exact_rows else int(rng.integers(1, max_rows + 1))
        parts = sorted(rng.integers(1, max_part + 1, size=n_rows).tolist(), reverse=True)
        result.append(Partition(tuple(int(p) for p in parts)))
    return result


def render_ascii(diagram: PartitionLike | Labeled) -> str:
    """Left-justified boxes; appended boxes show their labels."""
    if isinstance(diagram, (Partition, Sequence)):
        base, labels = as_partition(diagram), ()
    else:
        base, labels = diagram.base, diagram.labels

    n_rows = max(len(base), len(labels))
    rows = [
        [None] * base.part(r + 1) + list(labels[r] if r < len(labels) else ())
        for r in range(n_rows)
    ]
    if not any(rows):
        return EMPTY_MARKER

    width = max((len(str(label)) for row in rows for label in row if label), default=1)
    blank = " " * (width + 2)
    grid = Grid.from_ragged(
        ([f"[{' ' * width}]" if c is None else f"[{c:>{width}}]" for c in row] for row in rows),
        padding=blank,
    )
    return str(grid)
