"""
Tests for the command processor and report rendering.
"""

from fractions import Fraction

import pytest

from hermspec.core.processor import DEFAULT_DELTA, CommandProcessor, charpoly_of_input, moments_of_input
from hermspec.entities.report import STATUS_NOT_CONVERGED, STATUS_OK, AnalysisReport
from hermspec.entities.request import Command, RequestOptions
from hermspec.exact.exceptions import (
    BadParamsError,
    InsufficientMomentsError,
    InvalidInputError,
    NotRealRootedError,
)
from hermspec.exact.polynomial import Polynomial
from hermspec.utils.config import AnalysisSettings
from hermspec.utils.formatters import parse_report, render_report
from hermspec.utils.input_parser import parse_input

DOUBLE_THEN_SINGLE = {'poly': ["-2", "5", "-4", "1"]}
THREE_SIMPLE = {'poly': ["0", "3", "-4", "1"]}


def run(document, command, **options) -> AnalysisReport:
    request = parse_input(document, command, RequestOptions(**options))
    return CommandProcessor(AnalysisSettings()).run_command(request)


def test_analyze_double_then_single():
    report = run(DOUBLE_THEN_SINGLE, Command.ANALYZE)
    results = report.results
    assert report.status == STATUS_OK
    assert report.exit_code == 0
    assert results['charpoly'] == ["-2", "5", "-4", "1"]
    assert results['ladder']['dets'] == ["3", "2", "0"]
    assert results['ladder']['m'] == 2
    assert results['min_poly'] == ["2", "-3", "1"]
    assert results['spectrum']['groups'] == [
        {'q': 1, 'n': 1, 'factor': ["-2", "1"]},
        {'q': 2, 'n': 1, 'factor': ["-1", "1"]},
    ]
    assert results['syzygies']['count'] == 0
    assert results['signature']['ordered_multiplicities'] == [2, 1]
    assert all(report.exact.values())
    assert report.input == DOUBLE_THEN_SINGLE


def test_analyze_rejects_non_real_rooted_input():
    with pytest.raises(NotRealRootedError):
        run({'poly': ["1", "0", "1"]}, Command.ANALYZE)


def test_minpoly_and_factor():
    minpoly = run(THREE_SIMPLE, Command.MINPOLY)
    assert minpoly.results['min_poly'] == ["0", "3", "-4", "1"]
    factor = run(THREE_SIMPLE, Command.FACTOR)
    assert factor.results['spectrum']['groups'] == [{'q': 1, 'n': 3, 'factor': ["0", "3", "-4", "1"]}]
    assert factor.results['syzygies']['count'] == 2


def test_gap_hits_exact_value():
    report = run(DOUBLE_THEN_SINGLE, Command.GAP)
    gap = report.results['gap']
    assert report.status == STATUS_OK
    assert gap['mu'] == "1"
    assert gap['iterations'] == 1
    assert gap['exact'] is True
    assert report.exact['mu'] is True


def test_gap_without_convergence_exits_3():
    report = run(THREE_SIMPLE, Command.GAP, max_iter=1)
    assert report.status == STATUS_NOT_CONVERGED
    assert report.exit_code == 3
    gap = report.results['gap']
    assert gap['eps_sq'] == ["0", "36/49"]
    assert 'mu' not in gap
    assert Fraction(gap['mu_lower']) == Fraction(gap['certified_lower'])
    assert report.exact['mu_lower'] is False
    assert any("did not converge" in w for w in report.warnings)


def test_bounds_bracket_the_extremes():
    report = run({'poly': ["2", "-3", "1"]}, Command.BOUNDS)
    results = report.results
    assert report.status == STATUS_OK
    assert results['initial'] == ["1/2", "5/2"]
    assert Fraction(results['min']['certified_bound']) < 1
    assert Fraction(results['max']['certified_bound']) > 2
    assert 1 - Fraction(results['min']['certified_bound']) < Fraction(1, 10 ** 6)


def test_count_roots_between_endpoints():
    report = run(DOUBLE_THEN_SINGLE, Command.COUNT, a=Fraction(0), b=Fraction(3, 2))
    assert report.results == {'a': "0", 'b': "3/2", 'm': 2, 'count': 1}


def test_count_needs_both_endpoints():
    with pytest.raises(BadParamsError):
        run(DOUBLE_THEN_SINGLE, Command.COUNT, a=Fraction(0))


def test_rates_for_three_roots():
    report = run(None, Command.RATES, m=3, steps=3)
    rates = report.results['rates']
    assert rates['B'] == "1/6"
    assert rates['A'] == "4/9"
    assert rates['delta'] == str(DEFAULT_DELTA)
    assert rates['v'][:2] == ["1", "5/9"]
    assert report.status == STATUS_OK
    assert report.input == {'m': 3, 'delta': None, 'steps': 3}


def test_rates_need_m():
    with pytest.raises(BadParamsError):
        run(None, Command.RATES)


def test_classify_and_compare():
    report = run(DOUBLE_THEN_SINGLE, Command.CLASSIFY)
    assert report.results['signature']['ordered_multiplicities'] == [2, 1]
    document = {'first': DOUBLE_THEN_SINGLE, 'second': {'moments': ["3", "4", "6", "10", "18", "34"]}}
    comparison = run(document, Command.COMPARE).results['comparison']
    assert comparison['same_orbit'] is True
    assert comparison['same_class'] is True
    assert comparison['compared_traces'] == 4


def test_matrix_input():
    matrix = {'matrix': [[["2", "0"], ["1", "1"]], [["1", "-1"], ["3", "0"]]]}
    report = run(matrix, Command.MINPOLY)
    assert report.results['charpoly'] == ["4", "-5", "1"]
    assert report.results['min_poly'] == ["4", "-5", "1"]


def test_moment_input():
    request = parse_input({'moments': ["3", "4", "6", "10"]}, Command.FACTOR)
    assert charpoly_of_input(request.input) == Polynomial.from_spectrum([(1, 2), (2, 1)])
    assert list(moments_of_input(request.input, 6)) == [3, 4, 6, 10, 18, 34]


def test_inconsistent_moments():
    request = parse_input({'moments': ["2", "3", "5", "10"]}, Command.ANALYZE)
    with pytest.raises(InvalidInputError) as info:
        charpoly_of_input(request.input)
    assert info.value.details == {'index': 3}


def test_short_moments():
    request = parse_input({'moments': ["3", "4"]}, Command.ANALYZE)
    with pytest.raises(InsufficientMomentsError):
        charpoly_of_input(request.input)


def test_reports_are_deterministic():
    first = render_report(run(THREE_SIMPLE, Command.ANALYZE))
    second = render_report(run(THREE_SIMPLE, Command.ANALYZE))
    assert first == second
    assert first.endswith("}\n")


def test_rendered_report_parses_back():
    report = run(DOUBLE_THEN_SINGLE, Command.GAP)
    restored = parse_report(render_report(report))
    assert restored.to_dict() == report.to_dict()
    assert restored.exit_code == 0


def test_trace_cap_elides_long_traces():
    processor = CommandProcessor(AnalysisSettings(trace_cap=3))
    request = parse_input(None, Command.RATES, RequestOptions(m=4, steps=10))
    rates = processor.run_command(request).results['rates']
    assert len(rates['v']) == 4
    assert rates['v'][0] == "1"
