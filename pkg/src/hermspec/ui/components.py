"""
Rich UI components for status lines and report tables.
"""

from typing import Any, Dict, List, Tuple

from rich.table import Table
from rich.text import Text


class StatusIndicator:
    """Component for displaying status indicators with icons and colors."""

    @staticmethod
    def success(message: str) -> Text:
        """Create a success status indicator."""
        return Text(f"✅ {message}", style="success")

    @staticmethod
    def warning(message: str) -> Text:
        """Create a warning status indicator."""
        return Text(f"⚠️  {message}", style="warning")

    @staticmethod
    def error(message: str) -> Text:
        """Create an error status indicator."""
        return Text(f"❌ {message}", style="error")

    @staticmethod
    def info(message: str) -> Text:
        """Create an info status indicator."""
        return Text(f"ℹ️  {message}", style="info")


def _cell(value: Any) -> Text:
    if isinstance(value, bool):
        return Text("yes" if value else "no", style="verdict.true" if value else "verdict.false")
    if value is None:
        return Text("-", style="dim")
    if isinstance(value, list):
        return Text(", ".join(str(v) for v in value), style="rational")
    return Text(str(value), style="rational")


def create_results_table(title: str, rows: Dict[str, Any], exact: Dict[str, bool]) -> Table:
    """
    Two-column table of scalar results.

    Nested dictionaries are flattened with dotted keys; a field flagged
    advisory (exact=False) is marked as such.
    """
    table = Table(title=title, show_header=True, header_style="bold magenta")
    table.add_column("Field", style="cyan")
    table.add_column("Value")
    table.add_column("Exact", justify="center", width=8)

    for key, value in _flatten(rows):
        top = key.split('.')[0]
        flag = exact.get(key, exact.get(top))
        marker = Text("-", style="dim") if flag is None else (
            Text("✓", style="success") if flag else Text("~", style="advisory")
        )
        table.add_row(key, _cell(value), marker)
    return table


def _flatten(data: Dict[str, Any], prefix: str = "") -> List[Tuple[str, Any]]:
    items: List[Tuple[str, Any]] = []
    for key in sorted(data):
        value = data[key]
        name = f"{prefix}{key}"
        if isinstance(value, dict) and value:
            items.extend(_flatten(value, f"{name}."))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, entry in enumerate(value):
                items.extend(_flatten(entry, f"{name}[{i}]."))
        else:
            items.append((name, value))
    return items


def create_warnings_table(warnings: List[str]) -> Table:
    """Single-column table of report warnings."""
    table = Table(title="Warnings", show_header=False, border_style="yellow")
    table.add_column("Warning", style="warning")
    for warning in warnings:
        table.add_row(warning)
    return table
