"""Combinatorics of 1-dimensional simplicial complexes."""

from tentpole.simplicial.complex import (
    Complex1D,
    Edge,
    SubComplex,
    components,
    edge_key,
    parse_edge_key,
    sub_complex,
    validate,
)
from tentpole.simplicial.peel import PeelResult, SharedVertices, peel

__all__ = [
    "Complex1D",
    "Edge",
    "PeelResult",
    "SharedVertices",
    "SubComplex",
    "components",
    "edge_key",
    "parse_edge_key",
    "peel",
    "sub_complex",
    "validate",
]
