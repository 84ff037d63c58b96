#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from forge_utils.errors import NotAPartition


@dataclass(frozen=True, order=True)
class Partition:
    """A Young diagram stored as its non-increasing, strictly positive row lengths."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, part in enumerate(parts):
            if not isinstance(part, int) or part <= 0:
                raise NotAPartition(f"Part {i + 1} of {parts} is not a positive integer")
            if i and parts[i - 1] < part:
                raise NotAPartition(f"Parts {parts} increase at row {i + 1}")

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.parts))})"

    @property
    def label(self) -> str:
        return ".".join(map(str, self.parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def part(self, j: int) -> int:
        """lambda_j counted from 1; rows past the end have length 0."""
        if j < 1:
            raise IndexError(f"Rows are counted from 1, got {j}")
        return self.parts[j - 1] if j <= len(self.parts) else 0

    def diff(self, p: int, q: int) -> int:
        return self.part(p) - self.part(q)

    def padded(self, n_rows: int) -> tuple[int, ...]:
        return self.parts + (0,) * max(0, n_rows - len(self.parts))

    def cells(self) -> Iterator[tuple[int, int]]:
        for row, length in enumerate(self.parts, start=1):
            for col in range(1, length + 1):
                yield row, col

    def to_plain(self) -> list[int]:
        return list(self.parts)


PartitionLike = Union[Partition, Sequence[int]]


def make_partition(parts: Sequence[int]) -> Partition:
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    return Partition(tuple(parts))


def as_partition(value: PartitionLike) -> Partition:
    if isinstance(value, Partition):
        return value
    return make_partition(value)
