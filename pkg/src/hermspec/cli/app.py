"""
Main Typer application for the hermspec CLI.
"""

import typer

from hermspec import __version__
from hermspec.ui.console import console

app = typer.Typer(
    name="hermspec",
    help="🔢 hermspec - Exact spectral analysis of Hermitian matrices from their traces",
    rich_markup_mode="rich",
    context_settings={"help_option_names": ["-h", "--help"]},
    no_args_is_help=True
)


def version_callback(value: bool):
    """Show version information."""
    if value:
        console.print(f"🔢 [bold blue]hermspec[/bold blue] version [green]{__version__}[/green]")
        console.print("Exact rational analysis of Hermitian spectra from trace invariants")
        raise typer.Exit()

# Version option is handled in commands.py main callback
