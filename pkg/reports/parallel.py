#!/usr/bin/env python3
# www.jrodal.com

from typing import Any, Callable, Iterable

from mpire import WorkerPool

from consts import DEFAULT_JOBS


def run_parallel(
    fn: Callable[..., Any],
    items: Iterable[tuple],
    *,
    jobs: int = DEFAULT_JOBS,
    progress: bool = False,
) -> list[Any]:
    """Maps fn over argument tuples, results in input order."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(*item) for item in items]
    with WorkerPool(n_jobs=min(jobs, len(items))) as pool:
        return pool.map(fn, items, progress_bar=progress)
