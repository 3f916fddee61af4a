"""
Utility modules for hermspec.

This package provides configuration loading, input parsing and the
conversions between exact values and their JSON string forms.
"""

from hermspec.utils.config import AnalysisSettings, get_analysis_settings, load_configuration
from hermspec.utils.type_conversion import capped_trace, parse_rational, rational_str

__all__ = [
    'AnalysisSettings',
    'get_analysis_settings',
    'load_configuration',
    'capped_trace',
    'parse_rational',
    'rational_str',
]
