"""
CLI commands for hermspec using Typer with Rich output.

Every analysis command reads one JSON input document (a file, or stdin for
"-"), runs it through the CommandProcessor and writes the report to stdout:
canonical JSON by default, Rich tables with --format text. Errors go to
stderr as JSON (or an error panel in text mode) and set the exit code:
1 for invalid input, 2 for an internal inconsistency, 3 for non-convergence.
"""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import typer

from hermspec.cli.app import app, version_callback
from hermspec.core.processor import CommandProcessor
from hermspec.entities.request import Command, RequestOptions
from hermspec.exact.exceptions import HermspecError, InconsistencyError, ParseError
from hermspec.exact.scalars import to_exact
from hermspec.ui.components import StatusIndicator, create_results_table
from hermspec.ui.console import console, err_console
from hermspec.ui.formatters import format_error, format_report
from hermspec.utils.config import AnalysisSettings, get_analysis_settings, load_configuration, validate_settings
from hermspec.utils.formatters import render_error, render_json, render_report
from hermspec.utils.input_parser import parse_document, parse_input

logger = logging.getLogger('hermspec.cli')

INPUT_HELP = "📄 JSON input document, or - for stdin"
TOL_HELP = "🎯 Stopping tolerance as a rational string (e.g. 1/1000000)"
MAX_ITER_HELP = "🔁 Iteration limit (default: scaled to the problem)"
FORMAT_HELP = "🖨️  Output format: json or text"


@app.callback()
def main(
    ctx: typer.Context,
    version: Optional[bool] = typer.Option(
        None,
        "--version",
        help="📦 Show version and exit",
        callback=version_callback,
        is_eager=True
    ),
    debug: bool = typer.Option(
        False,
        "--debug",
        help="🐛 Enable debug logging"
    ),
    config_file: Optional[Path] = typer.Option(
        None,
        "--config-file", "-c",
        help="⚙️  Path to a YAML configuration file"
    ),
    env_file: Optional[Path] = typer.Option(
        None,
        "--env-file", "-e",
        help="📄 Path to .env file with HERMSPEC_* settings"
    )
):
    """
    🔢 hermspec - Exact spectral analysis from trace invariants

    Decides real-rootedness, counts distinct eigenvalues, factors a
    characteristic polynomial by multiplicity, bounds the minimal gap and the
    extreme eigenvalues, and compares unitary orbits, all in exact rational
    arithmetic.

    [bold green]Quick Examples:[/bold green]

    • [cyan]echo '{"poly": ["2", "-3", "1"]}' | hermspec analyze[/cyan]
    • [cyan]hermspec gap --input cp.json --tol 1/1000[/cyan]
    • [cyan]hermspec rates --m 3[/cyan]

    [bold yellow]Coefficients are listed in ascending powers.[/bold yellow]
    """
    ctx.ensure_object(dict)
    ctx.obj.update({
        'debug': debug,
        'config_file': str(config_file) if config_file else None,
        'env_file': str(env_file) if env_file else None,
    })


def _setup_logging(debug: bool, level_name: str) -> None:
    if debug:
        log_level = logging.DEBUG
        log_format = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    else:
        log_level = getattr(logging, level_name, logging.WARNING)
        log_format = '%(levelname)s - %(message)s'

    logging.basicConfig(
        level=log_level,
        format=log_format,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True
    )


def _load_settings(ctx: typer.Context, **overrides: Any) -> AnalysisSettings:
    obj: Dict[str, Any] = ctx.obj or {}
    config = load_configuration(config_file=obj.get('config_file'), env_file=obj.get('env_file'))
    settings = get_analysis_settings(config).with_overrides(**overrides)
    validate_settings(settings)
    _setup_logging(bool(obj.get('debug')), settings.log_level)
    return settings


def _read_input(input_path: str) -> str:
    if input_path == "-":
        return sys.stdin.read()
    path = Path(input_path)
    try:
        return path.read_text()
    except OSError as e:
        raise ParseError(f"cannot read input file {path}: {e.strerror or e}", {'file': str(path)}) from e


def _emit_error(error: HermspecError, output_format: str) -> None:
    if output_format == "text":
        context = ", ".join(f"{k}={v}" for k, v in sorted(error.details.items())) or None
        err_console.print(format_error(f"{type(error).__name__}: {error}", context))
    else:
        typer.echo(render_error(error), err=True, nl=False)


def _run(
    ctx: typer.Context,
    command: Command,
    input_path: Optional[str],
    tol: Optional[str],
    max_iter: Optional[int],
    output_format: Optional[str],
    **extra: Any
) -> None:
    """Load settings, parse input, run the command and emit the report."""
    fmt = (output_format or "json").lower()
    try:
        settings = _load_settings(
            ctx,
            tolerance=to_exact(tol) if tol is not None else None,
            max_iter=max_iter,
            output_format=output_format.lower() if output_format else None,
        )
        fmt = settings.output_format
        options = RequestOptions(
            tolerance=settings.tolerance,
            max_iter=settings.max_iter,
            output_format=fmt,
            **extra
        )
        document = parse_document(_read_input(input_path)) if input_path is not None else None
        request = parse_input(document, command, options)
        report = CommandProcessor(settings).run_command(request)
    except HermspecError as e:
        logger.debug(f"{command.value} failed: {e}")
        _emit_error(e, fmt)
        raise typer.Exit(e.exit_code)
    except (ArithmeticError, ValueError, RecursionError) as e:
        logger.error(f"Command execution failed: {e}")
        _emit_error(InconsistencyError(f"unexpected {type(e).__name__}: {e}"), fmt)
        raise typer.Exit(InconsistencyError.exit_code)

    if fmt == "text":
        console.print(format_report(report))
    else:
        typer.echo(render_report(report), nl=False)
    if report.exit_code:
        raise typer.Exit(report.exit_code)


def _input_option():
    return typer.Option("-", "--input", "-i", help=INPUT_HELP)


def _tol_option():
    return typer.Option(None, "--tol", help=TOL_HELP)


def _max_iter_option():
    return typer.Option(None, "--max-iter", help=MAX_ITER_HELP, min=1)


def _format_option():
    return typer.Option(None, "--format", "-f", help=FORMAT_HELP)


@app.command("analyze")
def analyze_command(
    ctx: typer.Context,
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    🔬 Full pipeline: ladder, minimal polynomial, multiplicity factors, syzygies and orbit class.

    [bold green]Example:[/bold green]

    • [cyan]echo '{"poly": ["-2", "5", "-4", "1"]}' | hermspec analyze[/cyan]
    """
    _run(ctx, Command.ANALYZE, input_path, tol, max_iter, output_format)


@app.command("minpoly")
def minpoly_command(
    ctx: typer.Context,
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    📐 Hankel ladder, distinct-root count and minimal polynomial.
    """
    _run(ctx, Command.MINPOLY, input_path, tol, max_iter, output_format)


@app.command("factor")
def factor_command(
    ctx: typer.Context,
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    🧩 Factor the characteristic polynomial into same-multiplicity factors.
    """
    _run(ctx, Command.FACTOR, input_path, tol, max_iter, output_format)


@app.command("gap")
def gap_command(
    ctx: typer.Context,
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    📏 Increasing certified lower bounds on the minimal eigenvalue gap.

    Exits with code 3 when the iteration limit is reached first; the partial
    bound is still certified.
    """
    _run(ctx, Command.GAP, input_path, tol, max_iter, output_format)


@app.command("bounds")
def bounds_command(
    ctx: typer.Context,
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    📉 Monotone certified bounds on the smallest and largest eigenvalues.
    """
    _run(ctx, Command.BOUNDS, input_path, tol, max_iter, output_format)


@app.command("count")
def count_command(
    ctx: typer.Context,
    a: str = typer.Option(..., "--a", help="⬅️  Left endpoint (rational string)"),
    b: str = typer.Option(..., "--b", help="➡️  Right endpoint (rational string)"),
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    🔢 Count distinct eigenvalues in the open interval ]a, b[.

    [bold green]Example:[/bold green]

    • [cyan]hermspec count --a 0 --b 3/2 --input cp.json[/cyan]
    """
    try:
        endpoints = {'a': to_exact(a), 'b': to_exact(b)}
    except HermspecError as e:
        _emit_error(e, (output_format or "json").lower())
        raise typer.Exit(e.exit_code)
    _run(ctx, Command.COUNT, input_path, tol, max_iter, output_format, **endpoints)


@app.command("rates")
def rates_command(
    ctx: typer.Context,
    m: int = typer.Option(..., "--m", help="🔢 Number of equidistant roots (at least 3)"),
    delta: Optional[str] = typer.Option(None, "--delta", help="🎯 Target precision (default about e^-10)"),
    steps: int = typer.Option(10, "--steps", help="🔁 Number of v_k values to report", min=0),
    strict: bool = typer.Option(False, "--strict", help="⛔ Fail on a certified rate-bound violation"),
    output_format: Optional[str] = _format_option()
):
    """
    📈 Convergence-rate constants and step-count window for equidistant spectra.

    [bold green]Example:[/bold green]

    • [cyan]hermspec rates --m 3[/cyan]
    """
    try:
        delta_value = to_exact(delta) if delta is not None else None
    except HermspecError as e:
        _emit_error(e, (output_format or "json").lower())
        raise typer.Exit(e.exit_code)
    _run(ctx, Command.RATES, None, None, None, output_format, m=m, delta=delta_value, steps=steps, strict=strict)


@app.command("classify")
def classify_command(
    ctx: typer.Context,
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    🏷️  Orbit class: multiplicities in ascending eigenvalue order.
    """
    _run(ctx, Command.CLASSIFY, input_path, tol, max_iter, output_format)


@app.command("compare")
def compare_command(
    ctx: typer.Context,
    input_path: str = _input_option(),
    tol: Optional[str] = _tol_option(),
    max_iter: Optional[int] = _max_iter_option(),
    output_format: Optional[str] = _format_option()
):
    """
    ⚖️  Same unitary orbit? Same orbit class? Input is {"first": ..., "second": ...}.
    """
    _run(ctx, Command.COMPARE, input_path, tol, max_iter, output_format)


@app.command("config")
def config_command(
    ctx: typer.Context,
    action: str = typer.Argument(
        "show",
        help="📋 Config action: show, validate"
    ),
    output_format: Optional[str] = _format_option()
):
    """
    ⚙️ Show or validate the effective settings.

    [bold green]Available actions:[/bold green]

    • [cyan]show[/cyan] - Print the settings after YAML, .env and defaults are merged
    • [cyan]validate[/cyan] - Check the configuration and report problems

    [bold green]Examples:[/bold green]

    • [cyan]hermspec config show[/cyan]
    • [cyan]hermspec --config-file hermspec.yaml config validate[/cyan]
    """
    fmt = (output_format or "json").lower()
    try:
        settings = _load_settings(ctx, output_format=output_format.lower() if output_format else None)
    except HermspecError as e:
        if action == "validate":
            err_console.print(StatusIndicator.error(f"Configuration invalid: {e}"))
        else:
            _emit_error(e, fmt)
        raise typer.Exit(e.exit_code)

    if action == "show":
        if settings.output_format == "text":
            console.print(create_results_table("Effective settings", settings.to_dict(), {}))
        else:
            typer.echo(render_json(settings.to_dict()), nl=False)
    elif action == "validate":
        err_console.print(StatusIndicator.success("Configuration is valid"))
    else:
        err_console.print(StatusIndicator.error(f"Unknown config action: {action}"))
        err_console.print("Available actions: show, validate")
        raise typer.Exit(1)


if __name__ == "__main__":
    app()
