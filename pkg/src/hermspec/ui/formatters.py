"""
Formatting functions for reports and errors in text mode.
"""

from typing import Optional

from rich.console import Group
from rich.panel import Panel
from rich.text import Text

from hermspec.entities.report import STATUS_OK, AnalysisReport
from hermspec.ui.components import create_results_table, create_warnings_table


def format_error(error_message: str, context: Optional[str] = None) -> Panel:
    """
    Format error messages for display.

    Args:
        error_message: The error message
        context: Optional context information

    Returns:
        Rich Panel with formatted error
    """
    content = Text(error_message, style="error")

    if context:
        content = Group(
            Text(error_message, style="error"),
            Text(""),
            Text(f"Context: {context}", style="dim")
        )

    return Panel(
        content,
        title="❌ Error",
        border_style="red",
        padding=(1, 2)
    )


def format_report(report: AnalysisReport) -> Panel:
    """
    Format a report as a panel of result and warning tables.

    Args:
        report: Report to display

    Returns:
        Rich Panel with the report
    """
    parts = [create_results_table(f"{report.command} results", report.results, report.exact)]
    if report.warnings:
        parts.append(create_warnings_table(report.warnings))
    converged = report.status == STATUS_OK
    status = Text(
        "✅ converged" if converged else "⚠️  not converged: partial certified results",
        style="success" if converged else "warning",
    )
    return Panel(
        Group(status, *parts),
        title=f"🔢 hermspec {report.command}",
        title_align="left",
        border_style="green" if converged else "yellow",
        padding=(1, 2)
    )
