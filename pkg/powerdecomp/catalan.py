#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial, prod
from typing import Iterator

from consts import DEFAULT_CAP_SEQUENCE
from forge_utils.errors import ResourceBound


def catalan_multidim(d: int, k: int) -> int:
    numerator = factorial(k * d) * prod(factorial(i) for i in range(k))
    denominator = prod(factorial(d + i) for i in range(k))
    return numerator // denominator


def _admissible(counts: tuple[int, ...], label: int, k: int) -> bool:
    # label is 0-based here
    if counts[label] >= k:
        return False
    return label == 0 or counts[label] < counts[label - 1]


@cache
def _dyck_count(counts: tuple[int, ...], k: int) -> int:
    if all(c == k for c in counts):
        return 1
    return sum(
        _dyck_count(counts[:n] + (counts[n] + 1,) + counts[n + 1 :], k)
        for n in range(len(counts))
        if _admissible(counts, n, k)
    )


def _check_cap(d: int, k: int, cap: int) -> None:
    if k * d > cap:
        raise ResourceBound(f"Sequences of length {k * d} exceed the cap of {cap}")


def dyck_sequence_count(d: int, k: int, *, cap: int = DEFAULT_CAP_SEQUENCE) -> int:
    """Sequences over 1..d, each label k times, where no label outnumbers its predecessor in any prefix."""
    _check_cap(d, k, cap)
    return _dyck_count((0,) * d, k)


def dyck_sequences(
    d: int, k: int, *, cap: int = DEFAULT_CAP_SEQUENCE
) -> Iterator[tuple[int, ...]]:
    _check_cap(d, k, cap)

    def rec(counts: tuple[int, ...], prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k * d:
            yield prefix
            return
        for n in range(d):
            if _admissible(counts, n, k):
                bumped = counts[:n] + (counts[n] + 1,) + counts[n + 1 :]
                yield from rec(bumped, (*prefix, n + 1))

    yield from rec((0,) * d, ())


def su2_singlet_multiplicity(d: int, n_parties: int) -> int:
    """Spin-0 multiplicity in the N-fold product of spin (d-1)/2.

    Multiplicity vectors are indexed by twice the spin.
    """
    if d < 1 or n_parties < 1:
        raise ValueError(f"d and N must be positive, got d={d}, N={n_parties}")
    twice_spin = d - 1
    spins = Counter({twice_spin: 1})
    for _ in range(n_parties - 1):
        combined: Counter[int] = Counter()
        for twice_j, mult in spins.items():
            for twice_total in range(abs(twice_j - twice_spin), twice_j + twice_spin + 1, 2):
                combined[twice_total] += mult
        spins = combined
    return spins[0]
