#!/usr/bin/env python3
# www.jrodal.com

import importlib
import inspect
import json
import unittest

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any, Callable, Generator

import click

from rich.console import RenderableType
from rich.markdown import Markdown
from rich.table import Table
from rich.text import Text
from rich.traceback import install
from rich.tree import Tree

from consts import (
    CONSOLE,
    DEFAULT_CAP_DIAGRAMS,
    DEFAULT_CAP_DIMS,
    DEFAULT_JOBS,
    ERR_CONSOLE,
    SCHEMA,
)
from forge_utils.errors import ConditionViolation, ForgeError, ResourceBound
from forge_utils.helpers import parse_int_list
from forge_utils.log_runtime import Runtime, log_runtime, print_runtime_table
from forge_utils.manifest_test_case import ManifestTestCase
from forge_utils.rich_test_runner import RichTestRunner
from liealg import Group, generators, is_lme, monomial_norms, trivial_subspace
from lrcalc import Decomposition, enumerate_lr_fillings, lr_expand
from powerdecomp import (
    Method,
    PowerQuery,
    necessary_condition,
    tensor_power_decompose,
    trivial_multiplicity,
)
from reports import (
    SweepReport,
    acceptance_theorem_cases,
    build_table,
    catalan_sweep,
    kernel_route_sweep,
    lr_oracle_sweep,
    pairing_report,
    random_theorem_cases,
    theorem_cases,
    theorem_sweep,
)
from telescope import build_expansion_plan, execute_plan, verify_conditions
from young import Partition, irrep_dim, make_partition, render_ascii

EXIT_INPUT = 1
EXIT_RESOURCE = 2
EXIT_VERIFICATION = 3

TEST_PACKAGES = ("young", "lrcalc", "powerdecomp", "telescope", "liealg", "reports")


@dataclass
class CommandConfig:
    fmt: str = "ascii"
    cap_dims: int = DEFAULT_CAP_DIMS
    cap_diagrams: int = DEFAULT_CAP_DIAGRAMS
    jobs: int = DEFAULT_JOBS
    timings: bool = False
    runtimes: list[Runtime] = field(default_factory=list)

    @contextmanager
    def timed(self, label: str) -> Generator[Runtime, None, None]:
        with log_runtime(label, console=None) as runtime:
            self.runtimes.append(runtime)
            yield runtime

    def emit(self, data: dict[str, Any], render: Callable[[], RenderableType]) -> None:
        if self.fmt == "json":
            click.echo(json.dumps({"schema": SCHEMA, **data}, indent=2))
        else:
            CONSOLE.print(render())


class PartitionParam(click.ParamType):
    name = "partition"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> Partition:
        if isinstance(value, Partition):
            return value
        try:
            return make_partition(parse_int_list(value))
        except ValueError as e:
            self.fail(str(e), param, ctx)


PARTITION = PartitionParam()
POSITIVE = click.IntRange(min=1)


class ForgeGroup(click.Group):
    """Maps library errors to exit codes."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.show()
            ctx.exit(EXIT_INPUT)
        except ResourceBound as e:
            ERR_CONSOLE.print(f"[bold red]Resource bound:[/bold red] {e}")
            ctx.exit(EXIT_RESOURCE)
        except ConditionViolation as e:
            ERR_CONSOLE.print(f"[bold red]Verification failed:[/bold red] {e}")
            ctx.exit(EXIT_VERIFICATION)
        except (ForgeError, ValueError, IndexError) as e:
            ERR_CONSOLE.print(f"[bold red]{type(e).__name__}:[/bold red] {e}")
            ctx.exit(EXIT_INPUT)


def _decomposition_table(decomposition: Decomposition, m: int | None) -> Table:
    table = Table(show_header=True, header_style="bold magenta")
    table.add_column("Diagram", justify="left")
    table.add_column("Multiplicity", justify="right")
    if m is not None:
        table.add_column(f"dim for SU({m})", justify="right")
    for nu, mult in decomposition:
        row = [str(nu), str(mult)]
        if m is not None:
            row.append(str(irrep_dim(nu, m)))
        table.add_row(*row)
    return table


def _sweep_table(report: SweepReport) -> Table:
    table = Table(title=f"{report.kind} sweep", show_header=True, header_style="bold magenta")
    table.add_column("Case", justify="left")
    table.add_column("Reasons", justify="left")
    for failure in report.failures:
        table.add_row(failure.case, ", ".join(failure.reasons))
    table.caption = f"{report.passed}/{report.total} passed"
    return table


@click.group(cls=ForgeGroup)
@click.option("--format", "fmt", type=click.Choice(["json", "ascii"]), default="ascii", show_default=True)
@click.option("--cap-dims", type=POSITIVE, default=DEFAULT_CAP_DIMS, show_default=True, help="Largest d^N for kernels")
@click.option(
    "--cap-diagrams",
    type=POSITIVE,
    default=DEFAULT_CAP_DIAGRAMS,
    show_default=True,
    help="Largest number of intermediate diagrams",
)
@click.option("--jobs", type=POSITIVE, default=DEFAULT_JOBS, show_default=True, help="Worker processes")
@click.option("--timings", is_flag=True, default=False, help="Print a runtime table to stderr")
@click.option("--log-locals", is_flag=True, default=False, help="Log local variables in traceback")
@click.pass_context
def cli(
    ctx: click.Context,
    fmt: str,
    cap_dims: int,
    cap_diagrams: int,
    jobs: int,
    timings: bool,
    log_locals: bool,
) -> None:
    install(suppress=[click], show_locals=log_locals)
    config = CommandConfig(fmt, cap_dims, cap_diagrams, jobs, timings)
    ctx.obj = config
    if timings:
        ctx.call_on_close(lambda: print_runtime_table(config.runtimes))


@cli.command()
@click.option("--lambda", "lam", type=PARTITION, required=True, help="First diagram, e.g. 2,1")
@click.option("--eta", type=PARTITION, required=True, help="Second diagram")
@click.option("--m", type=POSITIVE, default=None, help="SU(m) row bound; omit for GL")
@click.option("--reduce", "reduce_mod_m", is_flag=True, default=False, help="Strip full columns of height m")
@click.option("--fillings", is_flag=True, default=False, help="Also list every expansion")
@click.pass_obj
def decompose(
    config: CommandConfig,
    lam: Partition,
    eta: Partition,
    m: int | None,
    reduce_mod_m: bool,
    fillings: bool,
) -> None:
    """Decomposes the product of two irreps."""
    if reduce_mod_m and m is None:
        raise click.UsageError("--reduce needs --m")
    with config.timed("decompose"):
        decomposition = lr_expand(lam, eta, m)
        if reduce_mod_m:
            decomposition = decomposition.reduced(m)
        expansions = enumerate_lr_fillings(lam, eta, m) if fillings else []

    data: dict[str, Any] = {
        "kind": "decomposition",
        "lambda": lam.to_plain(),
        "eta": eta.to_plain(),
        "m": m,
        "components": decomposition.to_json(),
    }
    if fillings:
        data["fillings"] = [f.to_plain() for f in expansions]

    def render() -> RenderableType:
        if not fillings:
            return _decomposition_table(decomposition, m)
        tree = Tree(f"{lam} x {eta}")
        for f in expansions:
            tree.add(Text(f.render()))
        return tree

    config.emit(data, render)


@cli.command()
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--m", type=POSITIVE, required=True)
@click.option("--n-parties", type=POSITIVE, required=True)
@click.pass_obj
def power(config: CommandConfig, lam: Partition, m: int, n_parties: int) -> None:
    """Decomposes the N-th tensor power of one irrep."""
    q = PowerQuery.of(lam, m, n_parties)
    with config.timed("power"):
        decomposition = tensor_power_decompose(q, cap=config.cap_diagrams)
    trivial = decomposition.multiplicity(q.target) if q.target is not None else 0
    config.emit(
        {
            "kind": "power",
            "lambda": lam.to_plain(),
            "m": m,
            "N": n_parties,
            "components": decomposition.to_json(),
            "trivial": str(trivial),
        },
        lambda: _decomposition_table(decomposition, m),
    )


@cli.command("trivial-mult")
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--m", type=POSITIVE, required=True)
@click.option("--n-parties", type=POSITIVE, required=True)
@click.option(
    "--method",
    type=click.Choice([method.value for method in Method]),
    default=Method.ITERATED.value,
    show_default=True,
)
@click.pass_obj
def trivial_mult(config: CommandConfig, lam: Partition, m: int, n_parties: int, method: str) -> None:
    """Multiplicity of the trivial irrep in the N-th tensor power."""
    q = PowerQuery.of(lam, m, n_parties)
    with config.timed(f"trivial-mult ({method})"):
        value = trivial_multiplicity(q, method, cap=config.cap_diagrams)
    config.emit(
        {
            "kind": "trivial-multiplicity",
            "lambda": lam.to_plain(),
            "m": m,
            "N": n_parties,
            "method": method,
            "necessary_condition": necessary_condition(q),
            "trivial_multiplicity": str(value),
        },
        lambda: Text(str(value)),
    )


@cli.command()
@click.option("--lambda", "lam", type=PARTITION, required=True)
@click.option("--n-parties", type=POSITIVE, required=True)
@click.option("--trace", is_flag=True, default=False, help="Show the diagram after every step")
@click.pass_context
def construct(ctx: click.Context, lam: Partition, n_parties: int, trace: bool) -> None:
    """Builds the trivial irrep inside the N-th power step by step."""
    config: CommandConfig = ctx.obj
    with config.timed("construct"):
        plan = build_expansion_plan(lam, n_parties)
        final, steps = execute_plan(plan)
        report = verify_conditions(lam, n_parties)

    data: dict[str, Any] = {
        "kind": "construction",
        "lambda": lam.to_plain(),
        "N": n_parties,
        "final": final.to_plain(),
        "plan": plan.to_plain(),
        "report": report.to_plain(),
    }
    if trace:
        data["trace"] = [f.to_plain() for f in steps]

    def render() -> RenderableType:
        tree = Tree(f"lambda={lam} N={n_parties} -> {final}")
        if trace:
            for k, filling in enumerate(steps, start=1):
                tree.add(f"step {k}").add(Text(filling.render()))
        else:
            tree.add(Text(render_ascii(final)))
        tree.add("[green]all conditions hold[/green]" if report.ok else "[red]conditions fail[/red]")
        return tree

    config.emit(data, render)
    if not report.ok:
        ctx.exit(EXIT_VERIFICATION)


@cli.command("verify-theorem")
@click.option("--max-n", type=click.IntRange(min=2), default=5, show_default=True)
@click.option("--max-part", type=POSITIVE, default=4, show_default=True)
@click.option("--random", "random_count", type=POSITIVE, default=None, help="Draw this many random diagrams")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--n-parties", type=click.IntRange(min=2), default=6, show_default=True, help="N for random draws")
@click.option("--acceptance", is_flag=True, default=False, help="Parts <= 4 for N <= 5 and parts <= 2 for N = 6, 7")
@click.option("--routes/--no-routes", default=True, show_default=True, help="Compare iterated and staircase counts")
@click.option("--progress", is_flag=True, default=False)
@click.pass_context
def verify_theorem(
    ctx: click.Context,
    max_n: int,
    max_part: int,
    random_count: int | None,
    seed: int,
    n_parties: int,
    acceptance: bool,
    routes: bool,
    progress: bool,
) -> None:
    """Runs the construction for every diagram in a box."""
    config: CommandConfig = ctx.obj
    if acceptance:
        cases = acceptance_theorem_cases()
    elif random_count is not None:
        cases = random_theorem_cases(n_parties, random_count, seed, max_part)
    else:
        cases = theorem_cases(max_n, max_part)
    with config.timed("verify-theorem"):
        report = theorem_sweep(
            cases,
            compare_routes=routes,
            cap_diagrams=config.cap_diagrams,
            jobs=config.jobs,
            progress=progress,
        )
    config.emit(report.to_json(), lambda: _sweep_table(report))
    if not report.ok:
        ctx.exit(EXIT_VERIFICATION)


@cli.command()
@click.argument("kind", type=click.Choice(["lr-oracle", "catalan", "kernel-route"]))
@click.option("--progress", is_flag=True, default=False)
@click.pass_context
def sweep(ctx: click.Context, kind: str, progress: bool) -> None:
    """Cross-checks the independent routes to the same numbers."""
    config: CommandConfig = ctx.obj
    with config.timed(f"sweep {kind}"):
        match kind:
            case "lr-oracle":
                report = lr_oracle_sweep(jobs=config.jobs, progress=progress)
            case "catalan":
                report = catalan_sweep()
            case _:
                report = kernel_route_sweep(jobs=config.jobs)
    config.emit(report.to_json(), lambda: _sweep_table(report))
    if not report.ok:
        ctx.exit(EXIT_VERIFICATION)


@cli.command()
@click.option("--group", type=click.Choice([g.value for g in Group]), default=Group.SU.value, show_default=True)
@click.option("--d", "--modes", "d", type=POSITIVE, required=True, help="Local dimension, or modes for bosons")
@click.option("--n-parties", type=POSITIVE, required=True)
@click.option("--bosons", type=POSITIVE, default=1, show_default=True)
@click.option("--weight-basis", is_flag=True, default=False, help="so(d) in its weight basis")
@click.option("--basis", is_flag=True, default=False, help="Print the basis vectors")
@click.pass_obj
def synthesize(
    config: CommandConfig,
    group: str,
    d: int,
    n_parties: int,
    bosons: int,
    weight_basis: bool,
    basis: bool,
) -> None:
    """Exact basis of the states every generator annihilates."""
    gens = generators(group, d, bosons=bosons, weight_basis=weight_basis)
    norms = monomial_norms(d, bosons) if Group(group) is Group.BOSON else None
    with config.timed("synthesize"):
        states = trivial_subspace(gens, n_parties, cap=config.cap_dims, basis_norms=norms)
        lme = [is_lme(state) for state in states]

    data: dict[str, Any] = {
        "kind": "synthesis",
        "group": group,
        "d": d,
        "N": n_parties,
        "local_dim": gens[0].dim,
        "dimension": len(states),
        "all_lme": all(lme),
    }
    if basis:
        data["basis"] = [{**state.to_json(), "lme": ok} for state, ok in zip(states, lme)]

    def render() -> RenderableType:
        table = Table(title=f"{group} d={d} N={n_parties}: dimension {len(states)}")
        table.add_column("#", justify="right")
        table.add_column("LME", justify="center")
        table.add_column("Terms", justify="right")
        for j, (state, ok) in enumerate(zip(states, lme), start=1):
            table.add_row(str(j), "yes" if ok else "no", str(len(state.amplitudes)))
        return table

    config.emit(data, render)


@cli.command()
@click.argument("table_id", type=click.IntRange(1, 2))
@click.option("--d-max", type=POSITIVE, default=None)
@click.option("--n-max", type=POSITIVE, default=None)
@click.option("--pairings", is_flag=True, default=False, help="Also compare the N=4 pairings with the so(d) kernels")
@click.option("--progress", is_flag=True, default=False)
@click.pass_context
def tables(
    ctx: click.Context,
    table_id: int,
    d_max: int | None,
    n_max: int | None,
    pairings: bool,
    progress: bool,
) -> None:
    """Recomputes a printed multiplicity table."""
    config: CommandConfig = ctx.obj
    d_min = 2 if table_id == 1 else 3
    with config.timed(f"table {table_id}"):
        table = build_table(
            table_id,
            ds=range(d_min, d_max + 1) if d_max else None,
            ns=range(1, n_max + 1) if n_max else None,
            cap_dims=config.cap_dims,
            cap_diagrams=config.cap_diagrams,
            jobs=config.jobs,
            progress=progress,
        )
    data = table.to_json()
    spans = pairing_report() if pairings and table_id == 2 else []
    if spans:
        data["pairings"] = [span.to_json() for span in spans]

    def render() -> RenderableType:
        if not spans:
            return table.render()
        summary = Table(title="N=4 pairings", show_header=True, header_style="bold magenta")
        for column in ("d", "kernel", "pairing rank", "spans kernel"):
            summary.add_column(column, justify="right")
        for span in spans:
            summary.add_row(str(span.d), str(span.kernel_dim), str(span.pairing_rank), str(span.spans_kernel))
        grid = Table.grid()
        grid.add_row(table.render())
        grid.add_row(summary)
        return grid

    config.emit(data, render)
    if not table.ok:
        ctx.exit(EXIT_VERIFICATION)


def _test_classes(package: str) -> list[type[unittest.TestCase]]:
    module = importlib.import_module(f"{package}.tests")
    return [
        kls
        for _, kls in inspect.getmembers(module, inspect.isclass)
        if issubclass(kls, unittest.TestCase)
        and kls.__module__ == module.__name__
        and kls is not ManifestTestCase
    ]


@cli.command()
@click.option("--package", "packages", multiple=True, type=click.Choice(TEST_PACKAGES))
@click.pass_context
def selftest(ctx: click.Context, packages: tuple[str, ...]) -> None:
    """Runs the test suites with the rich runner."""
    config: CommandConfig = ctx.obj
    ok = True
    for package in packages or TEST_PACKAGES:
        CONSOLE.print(Markdown(f"# {package}"))
        with config.timed(f"selftest {package}"):
            ok &= RichTestRunner().run_cases(_test_classes(package))
    if not ok:
        ctx.exit(EXIT_INPUT)


if __name__ == "__main__":
    cli()
