#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Callable, Literal

from forge_utils.errors import IndexOutOfRange
from young import Partition, PartitionLike, as_partition

Domain = Literal["A1", "A2", "B1", "B2"]


def _check_label_step(m: int, k: int, n_parties: int) -> None:
    if not (1 <= m <= n_parties - 1 and 1 <= k <= n_parties):
        raise IndexOutOfRange(
            f"Need 1 <= m <= {n_parties - 1} and 1 <= k <= {n_parties}, got m={m}, k={k}"
        )


def beg_len_end(m: int, k: int, n_parties: int) -> tuple[int, int, int]:
    """Top row, length and bottom row of the telescope labelled m in step k."""
    _check_label_step(m, k, n_parties)
    if k <= n_parties - m:
        beg, length = m, k
    else:
        beg, length = m + 1, n_parties - m
    return beg, length, beg + length - 1


def telescope_entry(p: int, q: int, r: int, lam: PartitionLike) -> int:
    """Entry r of T_{p,q}, counted from the bottom; 0 outside 1..q."""
    lam = as_partition(lam)
    if 1 <= r < q:
        return lam.diff(p + r - 1, p + r)
    if r == q:
        return lam.part(p + q - 1)
    return 0


def telescope_entries(p: int, q: int, lam: PartitionLike) -> tuple[int, ...]:
    """Entries of T_{p,q} listed top to bottom."""
    return tuple(telescope_entry(p, q, r, lam) for r in range(q, 0, -1))


@dataclass(frozen=True)
class Telescope:
    label: int
    length: int
    entries: tuple[int, ...]

    @classmethod
    def of(cls, p: int, q: int, lam: PartitionLike) -> "Telescope":
        return cls(p, q, telescope_entries(p, q, lam))

    def __post_init__(self) -> None:
        if len(self.entries) != self.length:
            raise ValueError(f"Telescope of length {self.length} got {self.entries}")
        if any(entry < 0 for entry in self.entries):
            raise ValueError(f"Negative telescope entry in {self.entries}")

    def entry(self, r: int) -> int:
        return self.entries[self.length - r] if 1 <= r <= self.length else 0

    def partial_sums(self) -> tuple[int, ...]:
        """Top-down prefix sums: (lambda_{p+q-1}, ..., lambda_p)."""
        return tuple(accumulate(self.entries))

    @property
    def total(self) -> int:
        return sum(self.entries)


def boxes_added(n: int, k: int, i: int, lam: PartitionLike, n_parties: int) -> int:
    """(#n)^k_i: boxes labelled n added to row i in step k."""
    if not all(1 <= index <= n_parties for index in (n, k, i)):
        return 0
    if k <= n_parties - n:
        return telescope_entry(n, k, n + k - i, lam)
    return telescope_entry(n, n_parties - n, n_parties - i + 1, lam)


def piecewise_domain(n: int, k: int, i: int, n_parties: int) -> Domain | None:
    if not all(1 <= index <= n_parties for index in (n, k, i)) or n == n_parties:
        return None
    if 1 + i - n <= k <= n_parties - n:
        if n < i:
            return "A1"
        if n == i:
            return "A2"
    elif k > n_parties - n:
        if i > n + 1:
            return "B1"
        if i == n + 1:
            return "B2"
    return None


PIECEWISE_FORMULAS: dict[Domain, Callable[[int, int, int, Partition, int], int]] = {
    "A1": lambda n, k, i, lam, N: lam.diff(2 * n + k - i - 1, 2 * n + k - i),
    "A2": lambda n, k, i, lam, N: lam.part(n + k - 1),
    "B1": lambda n, k, i, lam, N: lam.diff(n + N - i, n + N - i + 1),
    "B2": lambda n, k, i, lam, N: lam.part(N - 1),
}


def boxes_added_piecewise(
    n: int, k: int, i: int, lam: PartitionLike, n_parties: int
) -> int:
    domain = piecewise_domain(n, k, i, n_parties)
    if domain is None:
        return 0
    return PIECEWISE_FORMULAS[domain](n, k, i, as_partition(lam), n_parties)
