"""
Analysis layer: every spectral question answered from moments in exact arithmetic.

Modules build on each other in this order: moments (Newton identities and
traces), hankel (determinant ladder and root counting), spectrum (minimal
polynomial and multiplicity factors), bounds (certified gap and extreme-root
iterations), rates (equidistant-spectrum convergence) and orbits (orbit
classes and comparison).
"""

from hermspec.analysis.bounds import extremal_bound, initial_outer_bounds, min_gap, squared_difference_poly
from hermspec.analysis.hankel import build_hankel, count_roots_in_interval, hankel_ladder, hankel_polynomial
from hermspec.analysis.moments import charpoly_from_traces, charpoly_of_matrix, power_sums_from_coeffs, traces_from_matrix
from hermspec.analysis.orbits import class_signature, compare, same_class, same_orbit
from hermspec.analysis.rates import A_of_m, B_of_m, rate_report, w_sq_iterate
from hermspec.analysis.spectrum import minimal_polynomial, multiplicity_of_root, multiplicity_spectrum, syzygy_check

__all__ = [
    'power_sums_from_coeffs',
    'charpoly_from_traces',
    'traces_from_matrix',
    'charpoly_of_matrix',
    'build_hankel',
    'hankel_ladder',
    'hankel_polynomial',
    'count_roots_in_interval',
    'minimal_polynomial',
    'multiplicity_of_root',
    'multiplicity_spectrum',
    'syzygy_check',
    'squared_difference_poly',
    'min_gap',
    'initial_outer_bounds',
    'extremal_bound',
    'w_sq_iterate',
    'B_of_m',
    'A_of_m',
    'rate_report',
    'class_signature',
    'same_orbit',
    'same_class',
    'compare',
]
