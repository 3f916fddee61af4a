"""
Tests for input document parsing and validation.
"""

from fractions import Fraction

import pytest

from hermspec.entities.request import Command, InputKind, RequestOptions
from hermspec.exact.exceptions import NotHermitianError, ParseError
from hermspec.exact.polynomial import Polynomial
from hermspec.utils.input_parser import parse_analysis_input, parse_document, parse_input


def test_parse_poly_document():
    request = parse_input(parse_document('{"poly": ["2", "-3", "1"]}'), Command.ANALYZE)
    assert request.input.kind is InputKind.POLY
    assert request.input.poly == Polynomial([2, -3, 1])
    assert request.warnings == []
    assert request.echo() == {'poly': ["2", "-3", "1"]}


def test_non_monic_poly_is_normalized_with_warning():
    request = parse_input({'poly': ["4", "-6", "2"]}, Command.MINPOLY)
    assert request.input.poly == Polynomial([2, -3, 1])
    assert len(request.warnings) == 1
    assert "monic" in request.warnings[0]


@pytest.mark.parametrize("poly", [["0", "0"], ["5"], "x^2", ["1", 0.5], ["1", "a/b"]])
def test_bad_polys_are_rejected(poly):
    with pytest.raises(ParseError) as info:
        parse_input({'poly': poly}, Command.ANALYZE)
    assert info.value.details['field'] == 'poly'


def test_parse_matrix_document():
    data = {'matrix': [[["2", "0"], ["0", "1"]], [["0", "-1"], ["3", "0"]]]}
    request = parse_input(data, Command.ANALYZE)
    assert request.input.kind is InputKind.MATRIX
    assert request.input.matrix.size == 2


def test_non_hermitian_matrix():
    with pytest.raises(NotHermitianError) as info:
        parse_input({'matrix': [["1", "2"], ["3", "1"]]}, Command.ANALYZE)
    assert info.value.details == {'row': 0, 'col': 1}


def test_empty_matrix():
    with pytest.raises(ParseError):
        parse_input({'matrix': []}, Command.ANALYZE)


def test_parse_moments_document():
    request = parse_input({'moments': ["3", "4", "6", "10"]}, Command.FACTOR)
    assert request.input.kind is InputKind.MOMENTS
    assert request.input.moments.source_degree == 3
    assert list(request.input.moments) == [3, 4, 6, 10]


@pytest.mark.parametrize("moments", [["0"], ["3/2", "1"], [], ["-1"]])
def test_bad_moments(moments):
    with pytest.raises(ParseError) as info:
        parse_input({'moments': moments}, Command.FACTOR)
    assert info.value.details['field'] == 'moments'


@pytest.mark.parametrize("document", [{}, {'poly': ["1", "1"], 'moments': ["1"]}, {'matrix': None, 'poly': []}])
def test_exactly_one_input_form(document):
    with pytest.raises(ParseError) as info:
        parse_input(document, Command.ANALYZE)
    assert info.value.details['field'] == '$'


def test_json_syntax_error_position():
    with pytest.raises(ParseError) as info:
        parse_document('{\n  "poly": [1, 2\n}')
    assert info.value.details['line'] == 3
    assert info.value.details['column'] == 1


def test_document_must_be_object():
    with pytest.raises(ParseError):
        parse_document('["1", "2"]')


def test_compare_needs_both_inputs():
    request = parse_input({'first': {'poly': ["-1", "1"]}, 'second': {'moments': ["1", "1"]}}, Command.COMPARE)
    assert request.input.kind is InputKind.POLY
    assert request.second.kind is InputKind.MOMENTS
    assert set(request.echo()) == {'first', 'second'}
    with pytest.raises(ParseError):
        parse_input({'first': {'poly': ["-1", "1"]}}, Command.COMPARE)


def test_nested_field_paths():
    with pytest.raises(ParseError) as info:
        parse_analysis_input({'poly': ["1", "x"]}, 'second', [])
    assert info.value.details['field'] == 'second.poly'


def test_rates_needs_no_document():
    options = RequestOptions(m=4, delta=Fraction(1, 100))
    request = parse_input(None, Command.RATES, options)
    assert request.input is None
    assert request.echo()['m'] == 4


def test_other_commands_need_a_document():
    with pytest.raises(ParseError):
        parse_input(None, Command.GAP)
