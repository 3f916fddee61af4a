"""
Formatting utilities for hermspec.

Reports are rendered as canonical JSON: sorted keys, two-space indent and a
trailing newline, so identical inputs give byte-identical output.
"""

import json
from typing import Any, Dict

from hermspec.entities.report import AnalysisReport
from hermspec.exact.exceptions import HermspecError, ParseError


def render_json(data: Dict[str, Any]) -> str:
    """Canonical JSON text for a JSON-compatible dictionary."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_report(report: AnalysisReport) -> str:
    """Canonical JSON text of a report."""
    return render_json(report.to_dict())


def parse_report(text: str) -> AnalysisReport:
    """
    Read a rendered report back.

    Raises:
        ParseError: If the text is not a report
    """
    try:
        data = json.loads(text)
        return AnalysisReport.from_dict(data)
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as e:
        raise ParseError(f"not a hermspec report: {e}") from e


def render_error(error: HermspecError) -> str:
    """Canonical JSON text for the error stream."""
    return render_json({'error': error.to_dict()})
