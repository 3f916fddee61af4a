"""
Input document parsing.

A document is a JSON object holding exactly one of

    {"poly": ["2", "-3", "1"]}              ascending coefficients
    {"matrix": [[["1", "0"], ...], ...]}   Hermitian matrix of [re, im] pairs
    {"moments": ["3", "4", "6"]}           t_0, t_1, ...

or, for `compare`, {"first": <document>, "second": <document>}. Every number
is a rational string; binary floats are refused.
"""

import json
import logging
from typing import Any, Dict, List, Optional

from hermspec.entities.moments import HermitianInput, MomentSeq
from hermspec.entities.request import AnalysisInput, AnalysisRequest, Command, InputKind, RequestOptions
from hermspec.exact.exceptions import HermspecError, ParseError
from hermspec.exact.polynomial import Polynomial
from hermspec.utils.type_conversion import parse_rational_list

logger = logging.getLogger('hermspec.utils.input_parser')

INPUT_KEYS = tuple(kind.value for kind in InputKind)


def parse_document(text: str) -> Dict[str, Any]:
    """
    Decode a JSON document.

    Raises:
        ParseError: With line and column of the first syntax error
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(
            f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
            {'line': e.lineno, 'column': e.colno},
        ) from e
    if not isinstance(document, dict):
        raise ParseError("input document must be a JSON object", {'field': '$'})
    return document


def _field_error(path: str, error: HermspecError) -> ParseError:
    details = dict(error.details)
    details['field'] = path
    return ParseError(f"{path}: {error}", details)


def _parse_poly(values: Any, path: str, warnings: List[str]) -> Polynomial:
    if not isinstance(values, list):
        raise ParseError(f"{path} must be a list of rational strings", {'field': path})
    try:
        poly = Polynomial(parse_rational_list(values))
    except ParseError as e:
        raise _field_error(path, e) from e
    if poly.is_zero:
        raise ParseError(f"{path} is the zero polynomial", {'field': path})
    if poly.degree < 1:
        raise ParseError(f"{path} must have degree at least 1, got a constant", {'field': path})
    if not poly.is_monic:
        message = f"{path} has leading coefficient {poly.leading}; divided through to make it monic"
        logger.warning(message)
        warnings.append(message)
        poly = poly.monic()
    return poly


def parse_analysis_input(data: Any, path: str, warnings: List[str]) -> AnalysisInput:
    """
    Parse one input form.

    Raises:
        ParseError: If zero or several input forms are present, or a value is malformed
        NotHermitianError: If a matrix is not Hermitian
    """
    if not isinstance(data, dict):
        raise ParseError(f"{path} must be an object", {'field': path})
    present = [key for key in INPUT_KEYS if key in data]
    if len(present) != 1:
        raise ParseError(
            f"{path} must hold exactly one of {', '.join(INPUT_KEYS)}; found {present or 'none'}",
            {'field': path},
        )
    kind = InputKind(present[0])
    field_path = f"{path}.{kind.value}" if path != '$' else kind.value
    value = data[kind.value]

    if kind is InputKind.POLY:
        return AnalysisInput(kind=kind, poly=_parse_poly(value, field_path, warnings))
    if kind is InputKind.MATRIX:
        try:
            matrix = HermitianInput.from_rows(value)
        except ParseError as e:
            raise _field_error(field_path, e) from e
        if matrix.size == 0:
            raise ParseError(f"{field_path} is empty", {'field': field_path})
        return AnalysisInput(kind=kind, matrix=matrix)
    if not isinstance(value, list):
        raise ParseError(f"{field_path} must be a list of rational strings", {'field': field_path})
    try:
        moments = MomentSeq.from_values(value)
    except ParseError as e:
        raise _field_error(field_path, e) from e
    if moments.source_degree < 1:
        raise ParseError(f"{field_path} describes an empty spectrum (t_0 = 0)", {'field': field_path})
    return AnalysisInput(kind=kind, moments=moments)


def parse_input(
    document: Optional[Dict[str, Any]],
    command: Command,
    options: Optional[RequestOptions] = None,
) -> AnalysisRequest:
    """
    Validate a decoded document for a command.

    `rates` takes no document; `compare` takes "first" and "second".

    Args:
        document: Decoded JSON object (None for rates)
        command: Command to run
        options: Run options (defaults when omitted)

    Returns:
        Validated AnalysisRequest

    Raises:
        ParseError: If the document does not match the command
    """
    command = Command(command)
    options = options or RequestOptions()
    warnings: List[str] = []
    if command is Command.RATES:
        return AnalysisRequest(command=command, options=options)
    if document is None:
        raise ParseError(f"command '{command.value}' needs an input document")

    if command is Command.COMPARE:
        missing = [key for key in ('first', 'second') if key not in document]
        if missing:
            raise ParseError(f"compare needs 'first' and 'second'; missing {missing}", {'field': '$'})
        first = parse_analysis_input(document['first'], 'first', warnings)
        second = parse_analysis_input(document['second'], 'second', warnings)
        return AnalysisRequest(command=command, input=first, second=second, options=options, warnings=warnings)

    primary = parse_analysis_input(document, '$', warnings)
    return AnalysisRequest(command=command, input=primary, options=options, warnings=warnings)
