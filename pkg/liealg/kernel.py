#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations

import networkx as nx
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix

from consts import DEFAULT_CAP_DIMS
from liealg.operators import (
    ONE,
    ZERO,
    MultiIndex,
    SparseOperator,
    act_on_index,
    check_cap,
    commutator,
    multi_indices,
)
from liealg.states import StateVector


def diagonal_weights(gens: list[SparseOperator]) -> list[list]:
    """Diagonal elements in the span of the generators and their commutators."""
    weights = [op.diagonal() for op in gens if op.is_diagonal() and op.nnz]
    for a, b in combinations(gens, 2):
        c = commutator(a, b)
        if c.nnz and c.is_diagonal():
            weights.append(c.diagonal())
    return weights


def zero_weight_columns(
    gens: list[SparseOperator], n_parties: int
) -> list[MultiIndex]:
    """Multi-indices every diagonal element annihilates; the kernel lives on these."""
    d = gens[0].dim
    weights = diagonal_weights(gens)
    return [
        multi
        for multi in multi_indices(d, n_parties)
        if all(sum((h[s] for s in multi), ZERO) == ZERO for h in weights)
    ]


@dataclass(frozen=True)
class KernelSystem:
    """The stacked equations g~ x = 0 restricted to the candidate columns."""

    columns: list[MultiIndex]
    rows: list[dict[int, object]]

    @classmethod
    def build(
        cls, gens: list[SparseOperator], n_parties: int, columns: list[MultiIndex]
    ) -> "KernelSystem":
        rows: dict[tuple[int, MultiIndex], dict[int, object]] = defaultdict(dict)
        for position, multi in enumerate(columns):
            for g, op in enumerate(gens):
                for target, value in act_on_index(op, multi):
                    row = rows[g, target]
                    row[position] = row.get(position, ZERO) + value
        cleaned = []
        for key in sorted(rows):
            row = {c: v for c, v in rows[key].items() if v != ZERO}
            if row:
                cleaned.append(row)
        return cls(columns, cleaned)

    def components(self) -> list[list[int]]:
        """Column blocks that share no equation, ordered by their first column."""
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.columns)))
        for row in self.rows:
            nx.add_path(graph, sorted(row))
        return sorted(sorted(block) for block in nx.connected_components(graph))


def _block_kernel(
    block: list[int], rows: list[dict[int, object]]
) -> list[tuple[int, dict[int, object]]]:
    """(free column, kernel vector) pairs from the reduced echelon form of one block."""
    local = {c: j for j, c in enumerate(block)}
    dod = {
        r: {local[c]: v for c, v in row.items()} for r, row in enumerate(rows)
    }
    if not dod:
        return [(c, {c: ONE}) for c in block]
    rref, pivots = DomainMatrix(dod, (len(rows), len(block)), QQ_I).rref()
    reduced = rref.to_sdm()
    pivot_set = set(pivots)
    vectors = []
    for free in range(len(block)):
        if free in pivot_set:
            continue
        vector = {block[free]: ONE}
        for r, pivot in enumerate(pivots):
            value = reduced.get(r, {}).get(free, ZERO)
            if value != ZERO:
                vector[block[pivot]] = -value
        vectors.append((block[free], vector))
    return vectors


def trivial_subspace(
    gens: list[SparseOperator],
    n_parties: int,
    *,
    cap: int = DEFAULT_CAP_DIMS,
    weight_filter: bool = True,
    basis_norms: tuple | None = None,
) -> list[StateVector]:
    """Exact basis of the joint kernel of the diagonal actions of `gens` on N parties.

    The basis is in reduced echelon form: vector j has a 1 at its own free
    multi-index, and free multi-indices increase lexicographically.
    """
    if not gens:
        raise ValueError("Need at least one generator")
    d = gens[0].dim
    if any(op.dim != d for op in gens):
        raise ValueError("Generators act on different dimensions")
    check_cap(d, n_parties, cap)

    columns = (
        zero_weight_columns(gens, n_parties)
        if weight_filter
        else list(multi_indices(d, n_parties))
    )
    system = KernelSystem.build(gens, n_parties, columns)
    by_block: dict[int, list[dict[int, object]]] = defaultdict(list)
    blocks = system.components()
    block_of = {c: b for b, block in enumerate(blocks) for c in block}
    for row in system.rows:
        by_block[block_of[next(iter(row))]].append(row)

    found = []
    for b, block in enumerate(blocks):
        found += _block_kernel(block, by_block[b])
    return [
        StateVector(
            d, n_parties, {columns[c]: v for c, v in vector.items()}, basis_norms
        )
        for _, vector in sorted(found, key=lambda pair: pair[0])
    ]


def kernel_dimension(
    gens: list[SparseOperator], n_parties: int, *, cap: int = DEFAULT_CAP_DIMS
) -> int:
    return len(trivial_subspace(gens, n_parties, cap=cap))


def span_rank(states: list[StateVector]) -> int:
    """Dimension of the span of the states."""
    columns = sorted({multi for state in states for multi in state.amplitudes})
    if not columns:
        return 0
    position = {multi: j for j, multi in enumerate(columns)}
    dod = {
        r: {position[multi]: value for multi, value in state.amplitudes.items()}
        for r, state in enumerate(states)
    }
    return DomainMatrix(dod, (len(states), len(columns)), QQ_I).rank()
