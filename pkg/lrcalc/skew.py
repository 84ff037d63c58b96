#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from functools import cache
from typing import Iterator

from forge_utils.errors import NotContained
from young import PartitionLike, as_partition, contains


def lr_skew_coefficient(
    gamma: PartitionLike, alpha: PartitionLike, beta: PartitionLike
) -> int:
    """Counts semistandard fillings of gamma/alpha with content beta whose reverse
    reading word is a lattice word."""
    gamma, alpha, beta = as_partition(gamma), as_partition(alpha), as_partition(beta)
    if not contains(gamma, alpha):
        raise NotContained(f"{alpha} is not contained in {gamma}")
    if gamma.weight - alpha.weight != beta.weight:
        return 0

    n_rows = len(gamma)
    n_labels = len(beta)

    def fill_row(
        row: int, content: tuple[int, ...], above: tuple[int, tuple[int, ...]]
    ) -> Iterator[tuple[tuple[int, ...], tuple[int, tuple[int, ...]]]]:
        start, end = alpha.part(row) + 1, gamma.part(row)
        above_start, above_labels = above

        def label_above(col: int) -> int:
            offset = col - above_start
            return above_labels[offset] if 0 <= offset < len(above_labels) else 0

        # right to left, labels weakly decreasing
        def rec(
            col: int, ceiling: int, content: tuple[int, ...], placed: tuple[int, ...]
        ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
            if col < start:
                yield content, placed
                return
            for label in range(label_above(col) + 1, ceiling + 1):
                i = label - 1
                if content[i] >= beta[i]:
                    continue
                if label > 1 and content[i] + 1 > content[i - 1]:
                    continue
                bumped = content[:i] + (content[i] + 1,) + content[i + 1 :]
                yield from rec(col - 1, label, bumped, (label, *placed))

        for new_content, labels in rec(end, n_labels, content, ()):
            yield new_content, (start, labels)

    @cache
    def count(row: int, content: tuple[int, ...], above: tuple[int, tuple[int, ...]]) -> int:
        if row > n_rows:
            return int(content == beta.parts)
        return sum(
            count(row + 1, new_content, new_above)
            for new_content, new_above in fill_row(row, content, above)
        )

    return count(1, (0,) * n_labels, (1, ()))


def lr_oracle_coefficient(
    lam: PartitionLike, eta: PartitionLike, nu: PartitionLike
) -> int:
    """Standard skew-tableau formulation, independent of the expansion rule."""
    lam, eta, nu = as_partition(lam), as_partition(eta), as_partition(nu)
    if nu.weight != lam.weight + eta.weight or not contains(nu, lam):
        return 0
    return lr_skew_coefficient(nu, lam, eta)
