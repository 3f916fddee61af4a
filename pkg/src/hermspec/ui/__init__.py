"""
UI module for hermspec.

This module provides Rich-based terminal output: status indicators, report
tables and error panels for the text output format.
"""

from hermspec.ui.console import console, err_console
from hermspec.ui.components import StatusIndicator, create_results_table, create_warnings_table
from hermspec.ui.formatters import format_error, format_report

__all__ = [
    'console',
    'err_console',
    'StatusIndicator',
    'create_results_table',
    'create_warnings_table',
    'format_error',
    'format_report',
]
