"""Dense univariate polynomial arithmetic, root finding and interval minimisation."""

from tentpole.poly.core import (
    NEG_INF_DEGREE,
    Poly,
    add,
    evaluate,
    from_roots,
    mul,
    scale,
    sum_of_squares,
    sup_distance,
)
from tentpole.poly.roots import min_on_interval, pair_conjugates, roots

__all__ = [
    "NEG_INF_DEGREE",
    "Poly",
    "add",
    "evaluate",
    "from_roots",
    "min_on_interval",
    "mul",
    "pair_conjugates",
    "roots",
    "scale",
    "sum_of_squares",
    "sup_distance",
]
