"""The algebra of continuous piecewise polynomials on a 1-dimensional complex."""

from tentpole.pwpoly.function import (
    PiecewisePoly,
    add,
    constant,
    degree,
    endpoint,
    eval_at,
    extend_linear,
    glue,
    linear_extension,
    make,
    mul,
    restrict,
    scale,
    sum_of_squares,
    tent,
    zero,
)
from tentpole.pwpoly.tentpoly import Monomial, TentPoly, from_tent, monomial, to_tent

__all__ = [
    "Monomial",
    "PiecewisePoly",
    "TentPoly",
    "add",
    "constant",
    "degree",
    "endpoint",
    "eval_at",
    "extend_linear",
    "from_tent",
    "glue",
    "linear_extension",
    "make",
    "monomial",
    "mul",
    "restrict",
    "scale",
    "sum_of_squares",
    "tent",
    "to_tent",
    "zero",
]
