"""Equidistant subspace codes over finite fields: construction, analysis, decoding."""

__version__ = '1.0.0'
