#!/usr/bin/env python3
# www.jrodal.com

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

import numpy as np

from consts import DEFAULT_CAP_DIAGRAMS, DEFAULT_CAP_DIMS, DEFAULT_JOBS, SCHEMA
from forge_utils.errors import ConditionViolation, ResourceBound
from liealg import (
    annihilated_by,
    is_lme,
    so_n4_states,
    so_simple_root_ops,
    span_rank,
    su_simple_root_ops,
    trivial_subspace,
)
from lrcalc import lr_expand, lr_oracle_coefficient
from powerdecomp import (
    Method,
    PowerQuery,
    catalan_multidim,
    dyck_sequence_count,
    trivial_multiplicity,
)
from reports.parallel import run_parallel
from telescope import build_expansion_plan, execute_plan, verify_conditions
from young import Partition, partitions_in_box, partitions_of_weight, random_partitions


@dataclass(frozen=True)
class SweepFailure:
    case: str
    reasons: tuple[str, ...]

    def to_json(self) -> dict[str, Any]:
        return {"case": self.case, "reasons": list(self.reasons)}


@dataclass(frozen=True)
class SweepReport:
    kind: str
    total: int
    failures: tuple[SweepFailure, ...] = ()
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def passed(self) -> int:
        return self.total - len(self.failures)

    def to_json(self) -> dict[str, Any]:
        data = {
            "schema": SCHEMA,
            "kind": self.kind,
            "total": self.total,
            "passed": self.passed,
            "failed": len(self.failures),
            "failures": [failure.to_json() for failure in self.failures],
        }
        if self.details:
            data["details"] = self.details
        return data

    def to_plain(self) -> dict[str, Any]:
        return {"kind": self.kind, "total": self.total, "failed": len(self.failures)}


def _collect(kind: str, results: list[SweepFailure | None], **details: Any) -> SweepReport:
    return SweepReport(
        kind, len(results), tuple(r for r in results if r is not None), details
    )


def theorem_cases(max_n: int, max_part: int, min_n: int = 2) -> list[tuple[Partition, int]]:
    """Every nonempty lam with at most N-1 rows and parts <= max_part, for N in min_n..max_n."""
    return [
        (lam, n_parties)
        for n_parties in range(min_n, max_n + 1)
        for lam in partitions_in_box(n_parties - 1, max_part)
        if lam
    ]


def acceptance_theorem_cases() -> list[tuple[Partition, int]]:
    return theorem_cases(5, 4) + theorem_cases(7, 2, min_n=6)


def random_theorem_cases(
    n_parties: int, count: int, seed: int, max_part: int = 9
) -> list[tuple[Partition, int]]:
    rng = np.random.default_rng(seed)
    return [
        (lam, n_parties)
        for lam in random_partitions(rng, count, n_parties - 1, max_part)
    ]


def check_theorem_case(
    lam: Partition,
    n_parties: int,
    compare_routes: bool = True,
    cap_diagrams: int = DEFAULT_CAP_DIAGRAMS,
) -> SweepFailure | None:
    reasons = [
        f"{kind}{list(indices)}" for kind, indices in verify_conditions(lam, n_parties).failures
    ]
    try:
        execute_plan(build_expansion_plan(lam, n_parties))
    except ConditionViolation as e:
        reasons.append(f"condition-{e.condition}@step-{e.step}")

    q = PowerQuery.of(lam, n_parties, n_parties)
    staircase = trivial_multiplicity(q, Method.STAIRCASE)
    if staircase < 1:
        reasons.append("no-trivial-component")
    if compare_routes:
        try:
            iterated = trivial_multiplicity(q, Method.ITERATED, cap=cap_diagrams)
        except ResourceBound:
            iterated = None
        if iterated is not None and iterated != staircase:
            reasons.append(f"routes-disagree[{iterated}, {staircase}]")
    if reasons:
        return SweepFailure(f"lambda={lam} N={n_parties}", tuple(reasons))
    return None


def theorem_sweep(
    cases: Iterable[tuple[Partition, int]],
    *,
    compare_routes: bool = True,
    cap_diagrams: int = DEFAULT_CAP_DIAGRAMS,
    jobs: int = DEFAULT_JOBS,
    progress: bool = False,
) -> SweepReport:
    items = [(lam, n, compare_routes, cap_diagrams) for lam, n in cases]
    return _collect("theorem", run_parallel(check_theorem_case, items, jobs=jobs, progress=progress))


def _diagrams_up_to(max_weight: int, max_rows: int) -> Iterator[Partition]:
    for w in range(max_weight + 1):
        yield from partitions_of_weight(w, max_rows)


def check_lr_pair(lam: Partition, eta: Partition, m: int) -> SweepFailure | None:
    decomposition = lr_expand(lam, eta, m)
    reasons = [
        f"nu={nu}[{decomposition.multiplicity(nu)}, {expected}]"
        for nu in partitions_of_weight(lam.weight + eta.weight, m)
        if (expected := lr_oracle_coefficient(lam, eta, nu)) != decomposition.multiplicity(nu)
    ]
    if reasons:
        return SweepFailure(f"lambda={lam} eta={eta} m={m}", tuple(reasons))
    return None


def lr_oracle_sweep(
    max_weight: int = 6,
    max_m: int = 4,
    *,
    jobs: int = DEFAULT_JOBS,
    progress: bool = False,
) -> SweepReport:
    items = [
        (lam, eta, m)
        for m in range(1, max_m + 1)
        for lam in _diagrams_up_to(max_weight, m)
        for eta in _diagrams_up_to(max_weight, m)
    ]
    return _collect("lr-oracle", run_parallel(check_lr_pair, items, jobs=jobs, progress=progress))


def check_catalan(d: int, k: int) -> SweepFailure | None:
    values = (
        trivial_multiplicity(PowerQuery.of((1,), d, k * d)),
        catalan_multidim(d, k),
        dyck_sequence_count(d, k),
    )
    if len(set(values)) > 1:
        return SweepFailure(f"d={d} k={k}", (f"values{list(values)}",))
    return None


def catalan_sweep(max_d: int = 4, max_k: int = 3) -> SweepReport:
    results = [check_catalan(d, k) for d in range(2, max_d + 1) for k in range(1, max_k + 1)]
    return _collect("catalan", results)


def check_kernel_route(d: int, n_parties: int, cap_dims: int = DEFAULT_CAP_DIMS) -> SweepFailure | None:
    staircase = trivial_multiplicity(PowerQuery.of((1,), d, n_parties), Method.STAIRCASE)
    basis = trivial_subspace(su_simple_root_ops(d), n_parties, cap=cap_dims)
    reasons = []
    if len(basis) != staircase:
        reasons.append(f"dimensions[{len(basis)}, {staircase}]")
    if not all(is_lme(state) for state in basis):
        reasons.append("not-lme")
    if reasons:
        return SweepFailure(f"d={d} N={n_parties}", tuple(reasons))
    return None


def kernel_route_sweep(max_d: int = 4, max_n: int = 6, *, jobs: int = DEFAULT_JOBS) -> SweepReport:
    items = [(d, n) for d in range(2, max_d + 1) for n in range(1, max_n + 1)]
    return _collect("kernel-route", run_parallel(check_kernel_route, items, jobs=jobs))


@dataclass(frozen=True)
class PairingSpan:
    d: int
    kernel_dim: int
    pairing_rank: int
    joint_rank: int
    invariant: bool

    @property
    def spans_kernel(self) -> bool:
        return self.pairing_rank == self.kernel_dim == self.joint_rank

    def to_json(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "kernel_dim": self.kernel_dim,
            "pairing_rank": self.pairing_rank,
            "invariant": self.invariant,
            "spans_kernel": self.spans_kernel,
        }


def pairing_span(d: int) -> PairingSpan:
    """Compares the three four-party pairings with the so(d) kernel at N = 4."""
    gens = so_simple_root_ops(d)
    kernel = trivial_subspace(gens, 4)
    pairings = list(so_n4_states(d))
    return PairingSpan(
        d,
        len(kernel),
        span_rank(pairings),
        span_rank(kernel + pairings),
        all(annihilated_by(gens, state) for state in pairings),
    )


def pairing_report(ds: Iterable[int] = (3, 4, 5, 6, 7)) -> list[PairingSpan]:
    return [pairing_span(d) for d in ds]
