"""Exact icosahedral invariant theory and certified surface-family constructions."""

__version__ = "0.1.0"
