"""
Configuration utilities for hermspec.

This module loads analysis settings from a YAML file, or, when no YAML file is
found, from .env files and HERMSPEC_* environment variables. Every setting has
a default and every setting can be overridden by a CLI flag.
"""

import logging
import os
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from hermspec.exact.exceptions import InvalidInputError, ParseError
from hermspec.exact.scalars import format_exact, to_exact
from hermspec.utils.type_conversion import safe_int_conversion

logger = logging.getLogger('hermspec.utils.config')

OUTPUT_FORMATS = ('json', 'text')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass(frozen=True)
class AnalysisSettings:
    """Effective settings for one run."""

    tolerance: Fraction = Fraction(1, 10 ** 6)
    max_iter: Optional[int] = None
    output_format: str = 'json'
    trace_cap: int = 100
    max_denominator: Optional[int] = 10 ** 64
    lattice_relative_step: Fraction = Fraction(1, 16)
    log_level: str = 'WARNING'

    def with_overrides(self, **overrides: Any) -> 'AnalysisSettings':
        """Copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['tolerance'] = format_exact(self.tolerance)
        data['lattice_relative_step'] = format_exact(self.lattice_relative_step)
        data['max_denominator'] = None if self.max_denominator is None else str(self.max_denominator)
        return data


def load_yaml_config(config_file: Optional[str] = None) -> Optional[Dict[str, Any]]:
    """
    Load configuration from YAML file.

    Searches for config files in this order:
    1. Specified config_file path
    2. ./hermspec.yaml (current directory)
    3. ~/.config/hermspec/config.yaml (user config directory)

    Args:
        config_file: Optional path to specific config file

    Returns:
        Dictionary with configuration or None if no config found
    """
    config_paths = []
    if config_file:
        config_paths.append(Path(config_file))
    config_paths.extend([
        Path('./hermspec.yaml'),
        Path.home() / '.config' / 'hermspec' / 'config.yaml',
    ])

    for config_path in config_paths:
        if config_path.exists():
            try:
                logger.info(f"Loading YAML configuration from {config_path}")
                with open(config_path, 'r') as f:
                    config = yaml.safe_load(f)
                return config or {}
            except (OSError, yaml.YAMLError) as e:
                logger.error(f"Error loading config from {config_path}: {e}")
                continue

    logger.info("No YAML configuration file found, falling back to environment variables")
    return None


def load_environment_config(env_file: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from .env file and environment variables.

    This is the fallback method when no YAML config is found.

    Args:
        env_file: Optional path to specific .env file to load

    Returns:
        Dictionary with configuration values
    """
    dotenv_loaded = False
    if env_file:
        env_path = Path(env_file)
        if env_path.exists():
            logger.info(f"Loading environment from {env_path}")
            load_dotenv(dotenv_path=env_path)
            dotenv_loaded = True

    if not dotenv_loaded:
        dotenv_path = Path('.env')
        if dotenv_path.exists():
            logger.info(f"Loading environment from {dotenv_path}")
            load_dotenv(dotenv_path=dotenv_path)
        else:
            logger.debug("No .env file found. Using environment variables directly.")

    return {
        'settings': {
            'analysis': {
                'tolerance': os.getenv('HERMSPEC_TOL'),
                'max_iter': os.getenv('HERMSPEC_MAX_ITER'),
                'trace_cap': os.getenv('HERMSPEC_TRACE_CAP'),
                'max_denominator': os.getenv('HERMSPEC_MAX_DENOMINATOR'),
            },
            'output': {
                'format': os.getenv('HERMSPEC_FORMAT'),
            },
            'logging': {
                'level': os.getenv('HERMSPEC_LOG_LEVEL'),
            },
        }
    }


def load_configuration(config_file: Optional[str] = None, env_file: Optional[str] = None) -> Dict[str, Any]:
    """
    Load configuration from YAML file or fallback to environment variables.

    Args:
        config_file: Optional path to YAML config file
        env_file: Optional path to .env file (fallback only)

    Returns:
        Dictionary with complete configuration
    """
    config = load_yaml_config(config_file)
    if config is None:
        config = load_environment_config(env_file)
    return config


def _parse_max_denominator(value: Any) -> Optional[int]:
    if isinstance(value, str) and value.strip().lower() in ('none', 'off', '0'):
        return None
    if value == 0:
        return None
    parsed = safe_int_conversion(value, default=-1)
    if parsed < 1:
        raise ParseError(f"max_denominator must be a positive integer or 'none', got {value!r}")
    return parsed


def get_analysis_settings(config: Dict[str, Any]) -> AnalysisSettings:
    """
    Build AnalysisSettings from a configuration dictionary.

    Missing or empty values keep their defaults.

    Args:
        config: Configuration dictionary as returned by load_configuration

    Returns:
        Validated AnalysisSettings
    """
    settings = config.get('settings', {}) or {}
    analysis = settings.get('analysis', {}) or {}
    output = settings.get('output', {}) or {}
    logging_config = settings.get('logging', {}) or {}

    overrides: Dict[str, Any] = {}
    if analysis.get('tolerance') not in (None, ''):
        overrides['tolerance'] = to_exact(str(analysis['tolerance']))
    if analysis.get('max_iter') not in (None, ''):
        overrides['max_iter'] = safe_int_conversion(analysis['max_iter'], default=0)
    if analysis.get('trace_cap') not in (None, ''):
        overrides['trace_cap'] = safe_int_conversion(analysis['trace_cap'], default=0)
    if analysis.get('max_denominator') not in (None, ''):
        overrides['max_denominator'] = _parse_max_denominator(analysis['max_denominator'])
    if analysis.get('lattice_relative_step') not in (None, ''):
        overrides['lattice_relative_step'] = to_exact(str(analysis['lattice_relative_step']))
    if output.get('format'):
        overrides['output_format'] = str(output['format']).lower()
    if logging_config.get('level'):
        overrides['log_level'] = str(logging_config['level']).upper()

    result = replace(AnalysisSettings(), **overrides)
    validate_settings(result)
    return result


def validate_settings(settings: AnalysisSettings) -> None:
    """
    Validate analysis settings.

    Raises:
        InvalidInputError: If a setting is out of range
    """
    if settings.tolerance <= 0:
        raise InvalidInputError(f"tolerance must be positive, got {settings.tolerance}")
    if settings.max_iter is not None and settings.max_iter < 1:
        raise InvalidInputError(f"max_iter must be at least 1, got {settings.max_iter}")
    if settings.output_format not in OUTPUT_FORMATS:
        raise InvalidInputError(f"output format must be one of {OUTPUT_FORMATS}, got {settings.output_format!r}")
    if settings.trace_cap < 2:
        raise InvalidInputError(f"trace_cap must be at least 2, got {settings.trace_cap}")
    if not 0 < settings.lattice_relative_step < 1:
        raise InvalidInputError(f"lattice_relative_step must lie in (0, 1), got {settings.lattice_relative_step}")
    if settings.log_level not in LOG_LEVELS:
        raise InvalidInputError(f"log level must be one of {LOG_LEVELS}, got {settings.log_level!r}")
