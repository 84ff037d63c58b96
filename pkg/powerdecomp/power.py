#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum

from consts import DEFAULT_CAP_DIAGRAMS
from forge_utils.errors import ResourceBound, TooManyRows
from lrcalc import Decomposition, lr_expand, lr_skew_coefficient
from young import Partition, PartitionLike, as_partition, make_partition


class Method(Enum):
    ITERATED = "iterated"
    STAIRCASE = "staircase"


@dataclass(frozen=True)
class PowerQuery:
    lam: Partition
    m: int
    n_parties: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", as_partition(self.lam))
        if self.m < 1 or self.n_parties < 1:
            raise ValueError(f"m and N must be positive, got m={self.m}, N={self.n_parties}")
        if len(self.lam) > self.m:
            raise TooManyRows(f"{self.lam} has more than {self.m} rows")

    @classmethod
    def of(cls, lam: PartitionLike, m: int, n_parties: int) -> "PowerQuery":
        return cls(as_partition(lam), m, n_parties)

    @property
    def boxes(self) -> int:
        return self.n_parties * self.lam.weight

    @property
    def target(self) -> Partition | None:
        """The m-row rectangle carrying every box of the power, when it exists."""
        if self.boxes % self.m:
            return None
        return make_partition([self.boxes // self.m] * self.m)


def necessary_condition(q: PowerQuery) -> bool:
    return q.boxes % q.m == 0


def _power(
    q: PowerQuery, *, within: Partition | None, cap: int
) -> Counter[Partition]:
    current: Counter[Partition] = Counter({q.lam: 1})
    if within is not None and not all(
        q.lam.part(r) <= within.part(r) for r in range(1, len(q.lam) + 1)
    ):
        return Counter()
    for _ in range(q.n_parties - 1):
        following: Counter[Partition] = Counter()
        for nu, mult in current.items():
            for product_shape, coefficient in lr_expand(nu, q.lam, q.m, within=within):
                following[product_shape] += mult * coefficient
        if len(following) > cap:
            raise ResourceBound(
                f"{len(following)} intermediate diagrams exceed the cap of {cap}"
            )
        current = following
    return current


def tensor_power_decompose(
    q: PowerQuery, *, cap: int = DEFAULT_CAP_DIAGRAMS
) -> Decomposition:
    return Decomposition(_power(q, within=None, cap=cap))


def fulton_staircase(lam: PartitionLike, n: int) -> tuple[Partition, Partition]:
    """n copies of lam placed corner to corner; copy 0 is the top-right one."""
    lam = as_partition(lam)
    if not lam:
        raise ValueError("The staircase needs a nonempty diagram")
    alpha, gamma = [], []
    for copy in range(n):
        shift = (n - 1 - copy) * lam[0]
        for part in lam:
            alpha.append(shift)
            gamma.append(shift + part)
    return make_partition(alpha), make_partition(gamma)


def trivial_multiplicity(
    q: PowerQuery,
    method: Method | str = Method.ITERATED,
    *,
    cap: int = DEFAULT_CAP_DIAGRAMS,
) -> int:
    method = Method(method)
    target = q.target
    if target is None:
        return 0
    if not q.lam:
        return 1
    match method:
        case Method.ITERATED:
            return _power(q, within=target, cap=cap)[target]
        case Method.STAIRCASE:
            alpha, gamma = fulton_staircase(q.lam, q.n_parties)
            return lr_skew_coefficient(gamma, alpha, target)
