"""Tentpole: positivity certificates for piecewise polynomials on 1-dimensional complexes."""

__version__ = "0.1.0"
