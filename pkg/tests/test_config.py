"""
Tests for YAML and environment configuration loading.
"""

import os
from fractions import Fraction

import pytest

from hermspec.exact.exceptions import InvalidInputError, ParseError
from hermspec.utils.config import (
    AnalysisSettings,
    get_analysis_settings,
    load_configuration,
    load_yaml_config,
    validate_settings,
)


def test_defaults_without_any_config():
    settings = get_analysis_settings(load_configuration())
    assert settings == AnalysisSettings()
    assert settings.tolerance == Fraction(1, 10 ** 6)
    assert settings.max_iter is None
    assert settings.output_format == 'json'
    assert settings.max_denominator == 10 ** 64


def test_yaml_file_in_working_directory(tmp_path):
    (tmp_path / "hermspec.yaml").write_text(
        "settings:\n"
        "  analysis:\n"
        "    tolerance: \"1/1000\"\n"
        "    max_iter: 50\n"
        "    trace_cap: 10\n"
        "  output:\n"
        "    format: TEXT\n"
        "  logging:\n"
        "    level: debug\n"
    )
    settings = get_analysis_settings(load_configuration())
    assert settings.tolerance == Fraction(1, 1000)
    assert settings.max_iter == 50
    assert settings.trace_cap == 10
    assert settings.output_format == 'text'
    assert settings.log_level == 'DEBUG'


def test_explicit_config_file_wins(tmp_path):
    (tmp_path / "hermspec.yaml").write_text("settings:\n  analysis:\n    max_iter: 5\n")
    custom = tmp_path / "custom.yaml"
    custom.write_text("settings:\n  analysis:\n    max_iter: 7\n")
    assert get_analysis_settings(load_configuration(str(custom))).max_iter == 7


def test_empty_yaml_file_gives_defaults(tmp_path):
    (tmp_path / "hermspec.yaml").write_text("")
    assert load_yaml_config() == {}
    assert get_analysis_settings(load_configuration()) == AnalysisSettings()


def test_environment_variables(monkeypatch):
    monkeypatch.setenv("HERMSPEC_TOL", "1/100")
    monkeypatch.setenv("HERMSPEC_MAX_DENOMINATOR", "none")
    monkeypatch.setenv("HERMSPEC_FORMAT", "text")
    settings = get_analysis_settings(load_configuration())
    assert settings.tolerance == Fraction(1, 100)
    assert settings.max_denominator is None
    assert settings.output_format == 'text'


def test_env_file(tmp_path):
    env_file = tmp_path / "custom.env"
    env_file.write_text("HERMSPEC_MAX_ITER=12\n")
    settings = get_analysis_settings(load_configuration(env_file=str(env_file)))
    assert settings.max_iter == 12
    os.environ.pop("HERMSPEC_MAX_ITER", None)


def test_bad_max_denominator(monkeypatch):
    monkeypatch.setenv("HERMSPEC_MAX_DENOMINATOR", "lots")
    with pytest.raises(ParseError):
        get_analysis_settings(load_configuration())


@pytest.mark.parametrize("overrides", [
    {'tolerance': Fraction(0)},
    {'max_iter': 0},
    {'output_format': 'xml'},
    {'trace_cap': 1},
    {'lattice_relative_step': Fraction(1)},
    {'log_level': 'LOUD'},
])
def test_validation_rejects_out_of_range(overrides):
    with pytest.raises(InvalidInputError):
        validate_settings(AnalysisSettings().with_overrides(**overrides))


def test_overrides_skip_none():
    settings = AnalysisSettings().with_overrides(tolerance=None, max_iter=3)
    assert settings.tolerance == Fraction(1, 10 ** 6)
    assert settings.max_iter == 3


def test_settings_to_dict_uses_strings():
    data = AnalysisSettings().to_dict()
    assert data['tolerance'] == "1/1000000"
    assert data['max_denominator'] == str(10 ** 64)
    assert data['lattice_relative_step'] == "1/16"
