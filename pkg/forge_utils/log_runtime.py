#!/usr/bin/env python3
# www.jrodal.com

import time

from contextlib import contextmanager
from dataclasses import dataclass
from typing import Generator, Iterable

from rich.console import Console
from rich.markdown import Markdown
from rich.table import Table

from consts import ERR_CONSOLE


@dataclass
class Runtime:
    label: str
    elapsed_time_unit: float | None = None
    unit: str | None = None
    elapsed_time_seconds: float | None = None

    def __str__(self) -> str:
        if self.elapsed_time_unit is None:
            return "X"
        return f"{self.elapsed_time_unit:.2f} {self.unit}"


def _scale(elapsed_time_seconds: float) -> tuple[float, str]:
    if elapsed_time_seconds < 1e-3:
        return elapsed_time_seconds * 1e6, "μs"
    if elapsed_time_seconds < 1:
        return elapsed_time_seconds * 1e3, "ms"
    if elapsed_time_seconds < 60:
        return elapsed_time_seconds, "s"
    if elapsed_time_seconds < 3600:
        return elapsed_time_seconds / 60, "m"
    return elapsed_time_seconds / 3600, "h"


@contextmanager
def log_runtime(
    msg: str, *, console: Console | None = ERR_CONSOLE
) -> Generator[Runtime, None, None]:
    start_time = time.perf_counter()
    runtime = Runtime(msg)
    try:
        yield runtime
    finally:
        runtime.elapsed_time_seconds = time.perf_counter() - start_time
        runtime.elapsed_time_unit, runtime.unit = _scale(runtime.elapsed_time_seconds)
        if console is not None:
            console.print(f"{msg} executed in {runtime}")


def print_runtime_table(
    runtimes: Iterable[Runtime], console: Console | None = None
) -> None:
    runtimes = [r for r in runtimes if r.elapsed_time_seconds is not None]
    if not runtimes:
        return

    console = console or ERR_CONSOLE
    console.print(Markdown("# Performance"))

    total = sum(r.elapsed_time_seconds or 0 for r in runtimes)
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Stage", justify="left")
    table.add_column("Runtime", justify="center")
    table.add_column("Share", justify="center")
    for runtime in runtimes:
        share = (runtime.elapsed_time_seconds or 0) / total if total else 1.0
        table.add_row(runtime.label, str(runtime), f"{share:.0%}")

    console.print(table, justify="center")
