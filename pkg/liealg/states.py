#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import permutations
from math import prod
from typing import Iterable, Mapping

from sympy.combinatorics import Permutation
from sympy.polys.domains import QQ, QQ_I

from forge_utils.errors import BadArity, UnsupportedDim, ZeroState
from liealg.operators import (
    ONE,
    ZERO,
    MultiIndex,
    SparseOperator,
    act_on_index,
    gaussian,
    monomial_norms,
    occupation_basis,
)


def _conj(value):
    return QQ_I(value.x, -value.y)


def _abs2(value):
    return value.x**2 + value.y**2


def format_rational(value) -> str:
    value = QQ.convert(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class StateVector:
    """Sparse amplitudes over |s_1 ... s_N>, s_p in 0..d-1.

    `basis_norms[s]` is <s|s> for a local basis that is orthogonal but not
    normalised, and `scale2` multiplies the whole squared norm.
    """

    local_dim: int
    n_parties: int
    amplitudes: Mapping[MultiIndex, object] = field(default_factory=dict)
    basis_norms: tuple | None = None
    scale2: object = QQ(1)

    def __post_init__(self) -> None:
        amplitudes = {}
        for multi, value in self.amplitudes.items():
            multi = tuple(multi)
            if len(multi) != self.n_parties or not all(0 <= s < self.local_dim for s in multi):
                raise IndexError(f"{multi} is not a basis index for d={self.local_dim}, N={self.n_parties}")
            value = gaussian(value)
            if value != ZERO:
                amplitudes[multi] = value
        object.__setattr__(self, "amplitudes", dict(sorted(amplitudes.items())))

    def weight(self, multi: MultiIndex):
        if self.basis_norms is None:
            return QQ(1)
        return prod((self.basis_norms[s] for s in multi), start=QQ(1))

    @property
    def norm2(self):
        return QQ.convert(self.scale2) * sum(
            (_abs2(a) * self.weight(multi) for multi, a in self.amplitudes.items()), QQ(0)
        )

    def is_zero(self) -> bool:
        return not self.amplitudes

    def with_amplitudes(self, amplitudes: Mapping[MultiIndex, object]) -> "StateVector":
        return StateVector(
            self.local_dim, self.n_parties, amplitudes, self.basis_norms, self.scale2
        )

    def __add__(self, other: "StateVector") -> "StateVector":
        amplitudes = dict(self.amplitudes)
        for multi, value in other.amplitudes.items():
            amplitudes[multi] = amplitudes.get(multi, ZERO) + value
        return self.with_amplitudes(amplitudes)

    def __rmul__(self, scalar) -> "StateVector":
        scalar = gaussian(scalar)
        return self.with_amplitudes({k: scalar * v for k, v in self.amplitudes.items()})

    def tensor(self, other: "StateVector") -> "StateVector":
        if self.local_dim != other.local_dim:
            raise ValueError("Tensor factors need the same local dimension")
        return StateVector(
            self.local_dim,
            self.n_parties + other.n_parties,
            {a + b: x * y for a, x in self.amplitudes.items() for b, y in other.amplitudes.items()},
            self.basis_norms,
            QQ.convert(self.scale2) * QQ.convert(other.scale2),
        )

    def to_json(self) -> dict:
        data = {
            "d": self.local_dim,
            "N": self.n_parties,
            "amplitudes": [
                {
                    "index": list(multi),
                    "re": format_rational(value.x),
                    "im": format_rational(value.y),
                }
                for multi, value in self.amplitudes.items()
            ],
        }
        if self.basis_norms is not None:
            data["basis_norms"] = [format_rational(w) for w in self.basis_norms]
            data["scale2"] = format_rational(self.scale2)
        return data

    def to_plain(self) -> dict:
        return self.to_json()


def apply_diagonal(op: SparseOperator, state: StateVector) -> StateVector:
    """The N-party Leibniz sum of op applied to the state, without building it."""
    if op.dim != state.local_dim:
        raise ValueError(f"Operator on C^{op.dim} cannot act on C^{state.local_dim}")
    result: dict[MultiIndex, object] = defaultdict(lambda: ZERO)
    for multi, amplitude in state.amplitudes.items():
        for target, value in act_on_index(op, multi):
            result[target] += value * amplitude
    return state.with_amplitudes(result)


def annihilated_by(gens: Iterable[SparseOperator], state: StateVector) -> bool:
    return all(apply_diagonal(op, state).is_zero() for op in gens)


def reduced_density(state: StateVector, party: int) -> list[list]:
    """rho_k as a matrix on the stored local basis, party counted from 1.

    With basis_norms = (n_0, ..., n_{d-1}) the stored basis is orthogonal but
    not normalised, and the result is rho_k acting on it:
    rho[s][t] = <e_s|rho_k|e_t> / n_s. That matrix is not Hermitian in general.
    rho[s][t] / n_t is Hermitian, the trace is 1, and the spectrum equals that
    of the physical density matrix on the normalised basis, which would need
    sqrt(n_s n_t) and so leave the Gaussian rationals. When rho_k is a multiple
    of the identity the two coincide.
    """
    if state.is_zero():
        raise ZeroState("The zero vector has no density matrix")
    if not 1 <= party <= state.n_parties:
        raise IndexError(f"Party {party} not in 1..{state.n_parties}")
    k = party - 1
    d = state.local_dim
    by_rest: dict[MultiIndex, dict[int, object]] = defaultdict(dict)
    for multi, amplitude in state.amplitudes.items():
        by_rest[multi[:k] + multi[k + 1 :]][multi[k]] = amplitude

    norm2 = sum(
        (_abs2(a) * state.weight(multi) for multi, a in state.amplitudes.items()), QQ(0)
    )
    rho = [[ZERO] * d for _ in range(d)]
    for rest, column in by_rest.items():
        weight = state.weight(rest)
        for s, a in column.items():
            for t, b in column.items():
                rho[s][t] += a * _conj(b) * gaussian(weight)
    for t in range(d):
        own = state.basis_norms[t] if state.basis_norms is not None else QQ(1)
        factor = gaussian(own / norm2)
        for s in range(d):
            rho[s][t] *= factor
    return rho


def is_lme(state: StateVector) -> bool:
    d = state.local_dim
    maximally_mixed = [
        [gaussian(QQ(1, d)) if s == t else ZERO for t in range(d)] for s in range(d)
    ]
    return all(
        reduced_density(state, party) == maximally_mixed
        for party in range(1, state.n_parties + 1)
    )


def basis_state(d: int, multi: Iterable[int]) -> StateVector:
    multi = tuple(multi)
    return StateVector(d, len(multi), {multi: 1})


def antisym_state(d: int, k: int, n_parties: int | None = None) -> StateVector:
    """k copies of the d-party antisymmetrizer applied to |0 1 ... d-1>."""
    if d < 1 or k < 1:
        raise BadArity(f"Need d >= 1 and k >= 1, got d={d}, k={k}")
    if n_parties is not None and n_parties != k * d:
        raise BadArity(f"N={n_parties} is not {k} x {d}")
    block = StateVector(
        d,
        d,
        {perm: Permutation(list(perm)).signature() for perm in permutations(range(d))},
    )
    state = block
    for _ in range(k - 1):
        state = state.tensor(block)
    return state


def trap_boson_state() -> StateVector:
    """Three traps, two bosons in three modes each, invariant under diagonal SU(3).

    Stored on the unnormalised monomials with scale2 = 1/8, so norm2 is 18.
    """
    index = {occ: s for s, occ in enumerate(occupation_basis(3, 2))}
    terms = [
        (1, ((2, 0, 0), (0, 2, 0), (0, 0, 2))),
        (2, ((1, 1, 0), (1, 0, 1), (0, 1, 1))),
        (-1, ((2, 0, 0), (0, 1, 1), (0, 1, 1))),
        (-1, ((0, 2, 0), (1, 0, 1), (1, 0, 1))),
        (-1, ((0, 0, 2), (1, 1, 0), (1, 1, 0))),
    ]
    amplitudes: dict[MultiIndex, object] = defaultdict(lambda: ZERO)
    for coef, traps in terms:
        for order in permutations(traps):
            amplitudes[tuple(index[occ] for occ in order)] += gaussian(coef)
    return StateVector(6, 3, amplitudes, monomial_norms(3, 2), QQ(1, 8))


def so_n4_states(d: int) -> tuple[StateVector, StateVector, StateVector]:
    """The three pairings of four parties by the invariant form sum |ii>."""
    if d < 3:
        raise UnsupportedDim(f"Need d >= 3, got {d}")
    first, second, third = {}, defaultdict(lambda: ZERO), defaultdict(lambda: ZERO)
    for i in range(d):
        for j in range(d):
            first[i, j, j, i] = 1
            if i != j:
                second[i, j, i, j] += ONE
                second[i, j, j, i] -= ONE
                third[i, i, j, j] += ONE
                third[i, j, j, i] -= ONE
    return (
        StateVector(d, 4, first),
        StateVector(d, 4, second),
        StateVector(d, 4, third),
    )
