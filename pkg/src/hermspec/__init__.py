"""
hermspec - Exact spectral analysis of Hermitian matrices from trace invariants.
"""

__version__ = "0.1.0"
