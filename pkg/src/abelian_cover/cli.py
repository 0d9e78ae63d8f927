from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError

from .config import (
    ChartConfig,
    ExecutionConfig,
    NumerologyConfig,
    ReportConfig,
    ToolkitConfig,
)
from .errors import CoverError, InvalidCharacterError
from .formatter import export_to_json, export_to_text
from .models import Report
from .pipeline import run_ceva_full, run_custom

FULL_SECTIONS = ("invariants", "pg", "rigidity", "numerology")


def _parse_factors(
    ctx: click.Context, param: click.Parameter, value: str | None
) -> tuple[int, int] | None:
    if value is None:
        return None
    try:
        first, second = (int(part) for part in value.split(","))
    except ValueError:
        raise click.BadParameter("expected two integers 'a,b'") from None
    return first, second


def input_options(f: Callable[..., Any]) -> Callable[..., Any]:
    """Options shared by every subcommand."""
    options = [
        click.option(
            "--arrangement",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
            help="Arrangement JSON file (defaults to the built-in Ceva arrangement)",
        ),
        click.option(
            "--character",
            type=click.Path(exists=True, dir_okay=False, path_type=Path),
            help="Character JSON file (required with --arrangement)",
        ),
        click.option(
            "--json", "as_json", is_flag=True, help="Emit the canonical JSON report"
        ),
        click.option(
            "--output",
            type=click.Path(dir_okay=False, path_type=Path),
            help="Write the report to a file instead of stdout",
        ),
        click.option("--verbose", is_flag=True, help="Print progress to stderr"),
        click.option("--workers", type=int, help="Thread pool size"),
        click.option("--chart-seed", type=int, help="Index of the valid infinity line"),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def numerology_options(f: Callable[..., Any]) -> Callable[..., Any]:
    options = [
        click.option("--k2", type=int, help="K^2 of the seed surface"),
        click.option(
            "--m", "m_values", type=int, multiple=True, help="Multiple of K (repeatable)"
        ),
        click.option("--dim", type=int, help="Complex dimension of products"),
        click.option(
            "--factors",
            callback=_parse_factors,
            help="Copies of the two seed surfaces, as 'a,b'",
        ),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _build_config(
    verbose: bool,
    as_json: bool,
    workers: int | None,
    chart_seed: int | None,
    k2: int | None = None,
    m_values: tuple[int, ...] = (),
    dim: int | None = None,
    factors: tuple[int, int] | None = None,
) -> ToolkitConfig:
    """Environment configuration with command-line overrides applied."""
    config = ToolkitConfig.from_env()
    try:
        return ToolkitConfig(
            chart=ChartConfig(
                search_bound=config.chart.search_bound,
                seed=config.chart.seed if chart_seed is None else chart_seed,
            ),
            execution=ExecutionConfig(
                max_workers=config.execution.max_workers if workers is None else workers
            ),
            report=ReportConfig(
                output_format="json" if as_json else config.report.output_format,
                verbose=verbose or config.report.verbose,
            ),
            numerology=NumerologyConfig(
                k_squared=k2,
                m_values=list(m_values) or config.numerology.m_values,
                dimension=config.numerology.dimension if dim is None else dim,
                factors=factors,
            ),
        )
    except ValidationError as e:
        raise click.UsageError(str(e)) from e


def _emit(report: Report, config: ToolkitConfig, output: Path | None) -> None:
    if config.report.output_format == "json":
        content = export_to_json(report)
    else:
        content = export_to_text(report)
    if output is None:
        click.echo(content)
    else:
        with open(output, "w") as f:
            f.write(content + "\n")
        click.echo(f"Report saved to: {output}", err=True)


def _run(
    sections: tuple[str, ...],
    arrangement: Path | None,
    character: Path | None,
    as_json: bool,
    output: Path | None,
    verbose: bool,
    workers: int | None,
    chart_seed: int | None,
    with_bases: bool = False,
    **numerology: Any,
) -> None:
    if (arrangement is None) != (character is None):
        raise click.UsageError("--arrangement and --character must be given together")
    config = _build_config(verbose, as_json, workers, chart_seed, **numerology)

    try:
        if arrangement is not None and character is not None:
            report = run_custom(arrangement, character, config, sections, with_bases)
        else:
            report = run_ceva_full(config, sections, with_bases)
    except InvalidCharacterError as e:
        raise click.ClickException("\n  ".join([str(e), *e.failures])) from e
    except CoverError as e:
        raise click.ClickException(str(e)) from e

    _emit(report, config, output)
    click.get_current_context().exit(0 if report.ok else 1)


@click.group(invoke_without_command=True)
@click.pass_context
def cli(ctx: click.Context) -> None:
    """Exact invariants of abelian covers of the plane branched along line arrangements.

    Without a subcommand, runs ``full`` on the built-in Ceva arrangement.
    """
    if ctx.invoked_subcommand is None:
        ctx.invoke(full)


@cli.command()
@input_options
@numerology_options
@click.option("--tables", "with_tables", is_flag=True, help="Also reproduce the bound tables")
@click.option("--bases", "with_bases", is_flag=True, help="Include eigenform bases")
def full(with_tables: bool = False, **kwargs: Any) -> None:
    """Chern numbers, p_g and q, rigidity and numerology."""
    sections = FULL_SECTIONS + (("tables",) if with_tables else ())
    _run(sections, **kwargs)


@cli.command()
@input_options
def invariants(**kwargs: Any) -> None:
    """K^2, e and intersection numbers of the cover."""
    _run(("invariants",), **kwargs)


@cli.command()
@input_options
@click.option("--bases", "with_bases", is_flag=True, help="Include eigenform bases")
def pg(**kwargs: Any) -> None:
    """Geometric genus per cyclic quotient and irregularity."""
    _run(("pg",), **kwargs)


@cli.command()
@input_options
def rigidity(**kwargs: Any) -> None:
    """Klein transformations of the plane that respect the covering."""
    _run(("rigidity",), **kwargs)


@cli.command()
@input_options
@numerology_options
def numerology(**kwargs: Any) -> None:
    """Branch curves of generic projections and deformation classes of products."""
    _run(("numerology",), **kwargs)


@cli.command()
@input_options
def tables(**kwargs: Any) -> None:
    """Degree, divisibility and point-order bounds with the printed values."""
    _run(("tables",), **kwargs)


if __name__ == "__main__":
    cli()
