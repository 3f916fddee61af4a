"""
Shared entities for the hermspec application.

This module contains data structures that are shared across
different layers of the application to avoid circular imports.
"""

from hermspec.entities.base_result import BaseResult
from hermspec.entities.iterations import ExtremalIteration, GapIteration, Side
from hermspec.entities.ladder import HankelLadder
from hermspec.entities.moments import HermitianInput, MomentSeq
from hermspec.entities.orbit import Lattice, OrbitComparison, OrbitSignature
from hermspec.entities.rates import RateReport
from hermspec.entities.report import AnalysisReport
from hermspec.entities.request import AnalysisInput, AnalysisRequest, Command, InputKind, RequestOptions
from hermspec.entities.spectrum import MultiplicityGroup, MultiplicitySpectrum, SyzygyClass, SyzygyReport

__all__ = [
    'BaseResult',
    'MomentSeq',
    'HermitianInput',
    'HankelLadder',
    'MultiplicityGroup',
    'MultiplicitySpectrum',
    'SyzygyClass',
    'SyzygyReport',
    'GapIteration',
    'ExtremalIteration',
    'Side',
    'RateReport',
    'Lattice',
    'OrbitSignature',
    'OrbitComparison',
    'AnalysisInput',
    'AnalysisRequest',
    'Command',
    'InputKind',
    'RequestOptions',
    'AnalysisReport',
]
