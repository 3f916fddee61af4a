"""
Core command processing.

The processor turns a validated AnalysisRequest into an AnalysisReport by
dispatching to the analysis layer. It knows nothing about terminals or files;
the CLI handles reading input and rendering output.
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from hermspec.analysis.bounds import extremal_bound, initial_outer_bounds, min_gap
from hermspec.analysis.hankel import count_roots_in_interval
from hermspec.analysis.moments import charpoly_from_traces, charpoly_of_matrix, power_sums_from_coeffs
from hermspec.analysis.orbits import class_signature, compare
from hermspec.analysis.rates import rate_report
from hermspec.analysis.spectrum import minimal_polynomial_of, multiplicity_spectrum, syzygy_check
from hermspec.entities.base_result import BaseResult
from hermspec.entities.iterations import Side
from hermspec.entities.moments import MomentSeq
from hermspec.entities.report import STATUS_NOT_CONVERGED, STATUS_OK, AnalysisReport
from hermspec.entities.request import AnalysisInput, AnalysisRequest, Command, InputKind
from hermspec.exact.exceptions import BadParamsError, InsufficientMomentsError, InvalidInputError
from hermspec.exact.polynomial import Polynomial
from hermspec.utils.config import AnalysisSettings
from hermspec.utils.type_conversion import poly_to_list, rational_list, rational_str

logger = logging.getLogger('hermspec.core')

# e^-10 rounded to a rational; the worked iteration-count windows use it
DEFAULT_DELTA = Fraction(1, 22027)

Payload = Tuple[Dict[str, Any], Dict[str, bool], bool, List[BaseResult]]


def charpoly_of_input(data: AnalysisInput) -> Polynomial:
    """
    Monic characteristic polynomial of any input form.

    A moment sequence must hold at least t_0..t_n, n = t_0, and every further
    moment must agree with the polynomial those determine.

    Raises:
        InsufficientMomentsError: If a moment sequence is too short
        InvalidInputError: If extra moments contradict the leading ones
    """
    if data.kind is InputKind.POLY and data.poly is not None:
        return data.poly
    if data.kind is InputKind.MATRIX and data.matrix is not None:
        return charpoly_of_matrix(data.matrix)
    moments = data.moments
    if moments is None:
        raise InvalidInputError("input holds no polynomial, matrix or moments")
    n = moments.source_degree
    if len(moments) < n + 1:
        raise InsufficientMomentsError(f"t_0 = {n} needs moments t_0..t_{n}, got {len(moments)}")
    cp = charpoly_from_traces(moments, n)
    implied = power_sums_from_coeffs(cp, len(moments))
    for k, (given, expected) in enumerate(zip(moments, implied)):
        if given != expected:
            raise InvalidInputError(
                f"moment t_{k} = {given} contradicts the degree-{n} polynomial fixed by t_0..t_{n} (expected {expected})",
                {'index': k},
            )
    return cp


def moments_of_input(data: AnalysisInput, count: int) -> MomentSeq:
    """At least `count` moments of an input; short sequences are extended from the polynomial."""
    if data.kind is InputKind.MOMENTS and data.moments is not None and len(data.moments) >= count:
        return data.moments
    return power_sums_from_coeffs(charpoly_of_input(data), count)


class CommandProcessor:
    """
    Runs analysis commands with the effective settings.

    Each command handler returns its results, the per-field exactness flags,
    a convergence verdict and the result objects whose warnings belong in the
    report.
    """

    def __init__(self, settings: Optional[AnalysisSettings] = None):
        """
        Initialize the processor.

        Args:
            settings: Effective settings (defaults when omitted)
        """
        self.settings = settings or AnalysisSettings()
        self.handlers: Dict[Command, Callable[[AnalysisRequest], Payload]] = {
            Command.ANALYZE: self._analyze,
            Command.MINPOLY: self._minpoly,
            Command.FACTOR: self._factor,
            Command.GAP: self._gap,
            Command.BOUNDS: self._bounds,
            Command.COUNT: self._count,
            Command.RATES: self._rates,
            Command.CLASSIFY: self._classify,
            Command.COMPARE: self._compare,
        }

    def run_command(self, request: AnalysisRequest) -> AnalysisReport:
        """
        Run one command.

        Non-convergence is reported through the status field; every other
        failure propagates as a HermspecError.
        """
        handler = self.handlers[request.command]
        logger.info(f"Running {request.command.value}")
        results, exact, converged, evidence = handler(request)
        warnings = list(request.warnings)
        for result in evidence:
            warnings.extend(result.get_warnings())
        report = AnalysisReport(
            command=request.command.value,
            input=request.echo(),
            results=results,
            warnings=warnings,
            exact=exact,
            status=STATUS_OK if converged else STATUS_NOT_CONVERGED,
        )
        if not converged:
            logger.warning(f"{request.command.value} did not converge; partial certified results reported")
        return report

    def _primary(self, request: AnalysisRequest) -> AnalysisInput:
        if request.input is None:
            raise InvalidInputError(f"command '{request.command.value}' needs an input")
        return request.input

    def _max_iter(self, request: AnalysisRequest) -> Optional[int]:
        return request.options.max_iter if request.options.max_iter is not None else self.settings.max_iter

    def _analyze(self, request: AnalysisRequest) -> Payload:
        cp = charpoly_of_input(self._primary(request))
        pm, ladder = minimal_polynomial_of(cp)
        spectrum = multiplicity_spectrum(cp)
        syzygies = syzygy_check(cp, spectrum)
        signature = class_signature(cp, self.settings.lattice_relative_step, self.settings.max_denominator)
        results = {
            'charpoly': poly_to_list(cp),
            'ladder': ladder.to_dict(),
            'min_poly': poly_to_list(pm),
            'spectrum': spectrum.to_dict(),
            'syzygies': syzygies.to_dict(),
            'signature': signature.to_dict(),
        }
        exact = {key: True for key in results}
        return results, exact, True, [ladder, spectrum, syzygies, signature]

    def _minpoly(self, request: AnalysisRequest) -> Payload:
        cp = charpoly_of_input(self._primary(request))
        pm, ladder = minimal_polynomial_of(cp)
        results = {'charpoly': poly_to_list(cp), 'ladder': ladder.to_dict(), 'min_poly': poly_to_list(pm)}
        return results, {key: True for key in results}, True, [ladder]

    def _factor(self, request: AnalysisRequest) -> Payload:
        cp = charpoly_of_input(self._primary(request))
        spectrum = multiplicity_spectrum(cp)
        syzygies = syzygy_check(cp, spectrum)
        results = {'charpoly': poly_to_list(cp), 'spectrum': spectrum.to_dict(), 'syzygies': syzygies.to_dict()}
        return results, {key: True for key in results}, True, [spectrum, syzygies]

    def _gap(self, request: AnalysisRequest) -> Payload:
        cp = charpoly_of_input(self._primary(request))
        gap = min_gap(
            cp,
            tol=request.options.tolerance,
            max_iter=self._max_iter(request),
            max_denominator=self.settings.max_denominator,
        )
        gap.trace_cap = self.settings.trace_cap
        results = {'gap': gap.to_dict()}
        exact = {'eps_sq': True, 'certified_lower': True, ('mu' if gap.exact else 'mu_lower'): gap.exact}
        return results, exact, gap.converged, [gap]

    def _bounds(self, request: AnalysisRequest) -> Payload:
        cp = charpoly_of_input(self._primary(request))
        pm, _ = minimal_polynomial_of(cp)
        tol = request.options.tolerance
        max_iter = self._max_iter(request)
        sides = {}
        for side in (Side.MIN, Side.MAX):
            result = extremal_bound(pm, side, tol, max_iter=max_iter, max_denominator=self.settings.max_denominator)
            result.trace_cap = self.settings.trace_cap
            sides[side] = result
        low, high = initial_outer_bounds(pm)
        results = {
            'min_poly': poly_to_list(pm),
            'initial': rational_list([low, high]),
            'min': sides[Side.MIN].to_dict(),
            'max': sides[Side.MAX].to_dict(),
        }
        exact = {
            'initial': True,
            'min': sides[Side.MIN].exact_extreme is not None,
            'max': sides[Side.MAX].exact_extreme is not None,
        }
        converged = all(result.converged for result in sides.values())
        return results, exact, converged, list(sides.values())

    def _count(self, request: AnalysisRequest) -> Payload:
        a, b = request.options.a, request.options.b
        if a is None or b is None:
            raise BadParamsError("count needs both interval endpoints a and b")
        cp = charpoly_of_input(self._primary(request))
        _, ladder = minimal_polynomial_of(cp)
        t = power_sums_from_coeffs(cp, 2 * ladder.m)
        count = count_roots_in_interval(t, ladder.m, a, b)
        results = {'a': rational_str(a), 'b': rational_str(b), 'm': ladder.m, 'count': count}
        return results, {'count': True}, True, [ladder]

    def _rates(self, request: AnalysisRequest) -> Payload:
        options = request.options
        if options.m is None:
            raise BadParamsError("rates needs the number of equidistant roots m")
        delta = options.delta if options.delta is not None else DEFAULT_DELTA
        report = rate_report(
            options.m,
            delta,
            options.steps,
            max_denominator=self.settings.max_denominator,
            strict=options.strict,
        )
        report.trace_cap = self.settings.trace_cap
        results = {'rates': report.to_dict()}
        exact = {
            'B': True,
            'A': True,
            'v': report.exact_steps >= options.steps,
            'k_min': False,
            'k_max': False,
            'observed_k': True,
        }
        return results, exact, report.observed_k is not None, [report]

    def _classify(self, request: AnalysisRequest) -> Payload:
        cp = charpoly_of_input(self._primary(request))
        signature = class_signature(cp, self.settings.lattice_relative_step, self.settings.max_denominator)
        results = {'charpoly': poly_to_list(cp), 'signature': signature.to_dict()}
        return results, {'signature': True}, True, [signature]

    def _compare(self, request: AnalysisRequest) -> Payload:
        if request.input is None or request.second is None:
            raise InvalidInputError("compare needs two inputs")
        cpP = charpoly_of_input(request.input)
        cpQ = charpoly_of_input(request.second)
        count = 2 * max(cpP.degree, cpQ.degree)
        comparison = compare(
            moments_of_input(request.input, count),
            cpP,
            moments_of_input(request.second, count),
            cpQ,
        )
        results = {'comparison': comparison.to_dict()}
        return results, {'same_orbit': True, 'same_class': True}, True, [comparison]
