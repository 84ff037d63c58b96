#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Mapping

from sympy.polys.domains import QQ, QQ_I

from consts import DEFAULT_CAP_DIMS
from forge_utils.errors import ResourceBound, UnsupportedDim

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)

MultiIndex = tuple[int, ...]


def gaussian(value) -> "QQ_I.dtype":
    """Lifts ints, QQ elements and QQ_I elements into QQ_I."""
    if isinstance(value, QQ_I.dtype):
        return value
    return QQ_I(QQ.convert(value), 0)


@dataclass(frozen=True)
class SparseOperator:
    """A dim x dim matrix over QQ_I keeping only its nonzero (row, col) entries."""

    dim: int
    entries: Mapping[tuple[int, int], object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        entries = {}
        for (row, col), value in self.entries.items():
            if not (0 <= row < self.dim and 0 <= col < self.dim):
                raise IndexError(f"Entry ({row}, {col}) outside a {self.dim}-dim operator")
            value = gaussian(value)
            if value != ZERO:
                entries[row, col] = value
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_terms(
        cls, dim: int, terms: Iterable[tuple[object, int, int]]
    ) -> "SparseOperator":
        """Builds sum(coef |row><col|) from (coef, row, col) terms."""
        entries: dict[tuple[int, int], object] = defaultdict(lambda: ZERO)
        for coef, row, col in terms:
            entries[row, col] += gaussian(coef)
        return cls(dim, entries)

    @classmethod
    def unit(cls, dim: int, row: int, col: int) -> "SparseOperator":
        return cls(dim, {(row, col): ONE})

    @classmethod
    def identity(cls, dim: int) -> "SparseOperator":
        return cls(dim, {(s, s): ONE for s in range(dim)})

    @cached_property
    def columns(self) -> dict[int, list[tuple[int, object]]]:
        by_column: dict[int, list[tuple[int, object]]] = defaultdict(list)
        for (row, col), value in sorted(self.entries.items()):
            by_column[col].append((row, value))
        return dict(by_column)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def _check_dim(self, other: "SparseOperator") -> None:
        if self.dim != other.dim:
            raise ValueError(f"Dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "SparseOperator") -> "SparseOperator":
        self._check_dim(other)
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries.get(key, ZERO) + value
        return SparseOperator(self.dim, entries)

    def __neg__(self) -> "SparseOperator":
        return SparseOperator(self.dim, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: "SparseOperator") -> "SparseOperator":
        return self + (-other)

    def __rmul__(self, scalar) -> "SparseOperator":
        scalar = gaussian(scalar)
        return SparseOperator(self.dim, {k: scalar * v for k, v in self.entries.items()})

    def __matmul__(self, other: "SparseOperator") -> "SparseOperator":
        self._check_dim(other)
        entries: dict[tuple[int, int], object] = defaultdict(lambda: ZERO)
        for (row, mid), left in self.entries.items():
            for col_row, right in other.rows.get(mid, ()):
                entries[row, col_row] += left * right
        return SparseOperator(self.dim, entries)

    @cached_property
    def rows(self) -> dict[int, list[tuple[int, object]]]:
        by_row: dict[int, list[tuple[int, object]]] = defaultdict(list)
        for (row, col), value in sorted(self.entries.items()):
            by_row[row].append((col, value))
        return dict(by_row)

    def transpose(self) -> "SparseOperator":
        return SparseOperator(self.dim, {(c, r): v for (r, c), v in self.entries.items()})

    def is_diagonal(self) -> bool:
        return all(row == col for row, col in self.entries)

    def diagonal(self) -> list:
        return [self.entries.get((s, s), ZERO) for s in range(self.dim)]


def commutator(a: SparseOperator, b: SparseOperator) -> SparseOperator:
    return a @ b - b @ a


def su_simple_root_ops(d: int) -> list[SparseOperator]:
    """|i><i+1| and |i+1><i| for each simple root of su(d)."""
    if d < 2:
        raise UnsupportedDim(f"su(d) needs d >= 2, got {d}")
    ops = []
    for i in range(d - 1):
        ops += [SparseOperator.unit(d, i, i + 1), SparseOperator.unit(d, i + 1, i)]
    return ops


def su_full_ops(d: int) -> list[SparseOperator]:
    """X_ij, Y_ij for i < j and the diagonal H_{i,i+1}."""
    if d < 2:
        raise UnsupportedDim(f"su(d) needs d >= 2, got {d}")
    ops = []
    for i in range(d):
        for j in range(i + 1, d):
            ops.append(SparseOperator.from_terms(d, [(1, i, j), (1, j, i)]))
            ops.append(SparseOperator.from_terms(d, [(-I, i, j), (I, j, i)]))
    for i in range(d - 1):
        ops.append(SparseOperator.from_terms(d, [(1, i, i), (-1, i + 1, i + 1)]))
    return ops


def _conjugate_terms(terms):
    return [(QQ_I(c.x, -c.y), r, s) for c, r, s in terms]


def _so_pair(d: int, terms) -> list[SparseOperator]:
    terms = [(gaussian(c), r, s) for c, r, s in terms]
    return [
        SparseOperator.from_terms(d, terms),
        SparseOperator.from_terms(d, _conjugate_terms(terms)),
    ]


def so_simple_root_ops(d: int, *, weight_basis: bool = False) -> list[SparseOperator]:
    """Raising/lowering pairs for the simple roots of so(d) on the basis |0>..|d-1>.

    With weight_basis=True the same operators are written in the isotropic basis
    (|2j> - i|2j+1>, |2j> + i|2j+1>, ..., |d-1>), where their commutators are diagonal.
    """
    if d < 3:
        raise UnsupportedDim(f"so(d) needs d >= 3, got {d}")
    ops = []
    for j in range(d // 2 - 1):
        b = 2 * j
        ops += _so_pair(
            d,
            [
                (1, b, b + 2), (I, b, b + 3), (-I, b + 1, b + 2), (1, b + 1, b + 3),
                (-1, b + 2, b), (I, b + 2, b + 1), (-I, b + 3, b), (-1, b + 3, b + 1),
            ],
        )
    if d % 2 == 0:
        a = d - 4
        ops += _so_pair(
            d,
            [
                (1, a, a + 2), (-I, a, a + 3), (-I, a + 1, a + 2), (-1, a + 1, a + 3),
                (-1, a + 2, a), (I, a + 2, a + 1), (I, a + 3, a), (1, a + 3, a + 1),
            ],
        )
    else:
        ops += _so_pair(
            d, [(1, d - 3, d - 1), (-I, d - 2, d - 1), (-1, d - 1, d - 3), (I, d - 1, d - 2)]
        )
    if weight_basis:
        to_weight, from_weight = so_weight_basis(d)
        ops = [to_weight @ op @ from_weight for op in ops]
    return ops


def so_weight_basis(d: int) -> tuple[SparseOperator, SparseOperator]:
    """(P^-1, P) where the columns of P are the isotropic vectors of so(d)."""
    half = QQ_I(QQ(1, 2), 0)
    from_weight, to_weight = [], []
    for j in range(d // 2):
        a, b = 2 * j, 2 * j + 1
        from_weight += [(1, a, a), (-I, b, a), (1, a, b), (I, b, b)]
        to_weight += [(half, a, a), (half * I, a, b), (half, b, a), (-half * I, b, b)]
    if d % 2:
        from_weight.append((1, d - 1, d - 1))
        to_weight.append((1, d - 1, d - 1))
    return (
        SparseOperator.from_terms(d, to_weight),
        SparseOperator.from_terms(d, from_weight),
    )


def so_weight_norms(d: int) -> tuple:
    """<f|f> for the columns f of P in so_weight_basis; they are mutually orthogonal."""
    return (QQ(2),) * (2 * (d // 2)) + ((QQ(1),) if d % 2 else ())


def occupation_basis(m: int, n: int) -> list[tuple[int, ...]]:
    """Occupations of n bosons in m modes, (n, 0, ..., 0) first."""
    return sorted(
        (occ for occ in product(range(n + 1), repeat=m) if sum(occ) == n), reverse=True
    )


def monomial_norms(m: int, n: int) -> tuple:
    """<m|m> = prod(n_k!) for the unnormalised monomials a1^+^n1 ... |vac>."""
    return tuple(QQ(prod(factorial(k) for k in occ)) for occ in occupation_basis(m, n))


def hopping(m: int, n: int, alpha: int, beta: int) -> SparseOperator:
    """alpha^+ beta on S^n(C^m) in the unnormalised monomial basis."""
    basis = occupation_basis(m, n)
    index = {occ: s for s, occ in enumerate(basis)}
    terms = []
    for s, occ in enumerate(basis):
        if occ[beta] == 0:
            continue
        moved = list(occ)
        moved[beta] -= 1
        moved[alpha] += 1
        terms.append((occ[beta], index[tuple(moved)], s))
    return SparseOperator.from_terms(len(basis), terms)


def bosonic_generator_ops(m: int, n: int) -> list[SparseOperator]:
    if m < 2 or n < 1:
        raise UnsupportedDim(f"Need m >= 2 modes and n >= 1 bosons, got m={m}, n={n}")
    ops = []
    for a in range(m - 1):
        ops += [hopping(m, n, a, a + 1), hopping(m, n, a + 1, a)]
    return ops


def linear_index(multi: MultiIndex, d: int) -> int:
    """Party 1 is the most significant digit."""
    index = 0
    for s in multi:
        index = index * d + s
    return index


def multi_indices(d: int, n_parties: int) -> Iterator[MultiIndex]:
    return product(range(d), repeat=n_parties)


def act_on_index(op: SparseOperator, multi: MultiIndex) -> Iterator[tuple[MultiIndex, object]]:
    """Terms of the Leibniz sum applied to one basis vector |multi>."""
    for p, s in enumerate(multi):
        for t, value in op.columns.get(s, ()):
            yield multi[:p] + (t,) + multi[p + 1 :], value


def check_cap(d: int, n_parties: int, cap: int) -> None:
    if d**n_parties > cap:
        raise ResourceBound(f"{d}^{n_parties} = {d**n_parties} exceeds the cap of {cap}")


def diagonal_action(
    op: SparseOperator, n_parties: int, *, cap: int = DEFAULT_CAP_DIMS
) -> SparseOperator:
    """A x 1 x ... x 1 + ... + 1 x ... x 1 x A on N parties."""
    check_cap(op.dim, n_parties, cap)
    if n_parties == 1:
        return op
    entries: dict[tuple[int, int], object] = defaultdict(lambda: ZERO)
    for multi in multi_indices(op.dim, n_parties):
        col = linear_index(multi, op.dim)
        for target, value in act_on_index(op, multi):
            entries[linear_index(target, op.dim), col] += value
    return SparseOperator(op.dim**n_parties, entries)


class Group(Enum):
    SU = "su"
    SU_FULL = "su-full"
    SO = "so"
    BOSON = "boson"


def generators(
    group: Group | str, d: int, *, bosons: int = 1, weight_basis: bool = False
) -> list[SparseOperator]:
    """Generator set by name; for bosons d counts the modes."""
    match Group(group):
        case Group.SU:
            return su_simple_root_ops(d)
        case Group.SU_FULL:
            return su_full_ops(d)
        case Group.SO:
            return so_simple_root_ops(d, weight_basis=weight_basis)
        case Group.BOSON:
            return bosonic_generator_ops(d, bosons)
