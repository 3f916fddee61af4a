#!/usr/bin/env python3
"""
Validate Rich report rendering across different terminal sizes.
This ensures result tables and panels stay readable at any width.
"""

import pytest
from rich.console import Console

from hermspec.core.processor import CommandProcessor
from hermspec.entities.report import STATUS_NOT_CONVERGED, AnalysisReport
from hermspec.entities.request import Command, RequestOptions
from hermspec.ui.components import StatusIndicator, create_results_table, create_warnings_table
from hermspec.ui.console import custom_theme
from hermspec.ui.formatters import format_error, format_report
from hermspec.utils.input_parser import parse_input

WIDTHS = [40, 60, 80, 120, 200]


def sample_report() -> AnalysisReport:
    request = parse_input({'poly': ["-2", "5", "-4", "1"]}, Command.ANALYZE)
    return CommandProcessor().run_command(request)


def render(renderable, width: int) -> str:
    test_console = Console(width=width, theme=custom_theme, record=True, force_terminal=False)
    test_console.print(renderable)
    return test_console.export_text()


@pytest.mark.parametrize("width", WIDTHS)
def test_report_panel_renders(width):
    """Test the report panel at a specific terminal width."""
    print(f"\n🖥️  Testing terminal width: {width} columns")
    text = render(format_report(sample_report()), width)
    assert "hermspec analyze" in text
    assert "converged" in text
    assert all(len(line) <= width for line in text.splitlines())
    print(f"  ✅ Report panel renders at {width} columns")


@pytest.mark.parametrize("width", WIDTHS)
def test_error_panel_renders(width):
    panel = format_error("ParseError: invalid JSON at line 1, column 2", context="line=1, column=2")
    text = render(panel, width)
    assert "Error" in text
    assert "Context" in text


def test_not_converged_panel_lists_warnings():
    request = parse_input({'poly': ["0", "3", "-4", "1"]}, Command.GAP, RequestOptions(max_iter=1))
    report = CommandProcessor().run_command(request)
    assert report.status == STATUS_NOT_CONVERGED
    text = render(format_report(report), 120)
    assert "not converged" in text
    assert "Warnings" in text


def test_results_table_flattens_and_flags():
    rows = {'gap': {'mu': "1", 'converged': True, 'eps_sq': ["0", "1"]}, 'count': 2}
    text = render(create_results_table("gap results", rows, {'gap': False, 'count': True}), 120)
    for key in ("gap.mu", "gap.converged", "gap.eps_sq", "count"):
        assert key in text
    assert "~" in text
    assert "✓" in text
    assert "yes" in text


def test_results_table_flattens_lists_of_objects():
    rows = {'groups': [{'q': 1, 'n': 2}, {'q': 3, 'n': 1}]}
    text = render(create_results_table("factor results", rows, {}), 120)
    assert "groups[0].q" in text
    assert "groups[1].n" in text


def test_status_indicators_and_warnings():
    text = render(StatusIndicator.success("Configuration is valid"), 80)
    assert "Configuration is valid" in text
    text = render(create_warnings_table(["gap iteration did not converge"]), 80)
    assert "gap iteration did not converge" in text
    for indicator in (StatusIndicator.warning, StatusIndicator.error, StatusIndicator.info):
        assert "note" in render(indicator("note"), 40)
