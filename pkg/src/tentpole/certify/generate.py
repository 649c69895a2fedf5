"""Random nonnegative test instances."""

import logging

import numpy as np

from tentpole.interval import WEIGHT
from tentpole.poly import Poly
from tentpole.pwpoly import PiecewisePoly, zero
from tentpole.simplicial import Complex1D, components

logger = logging.getLogger(__name__)

# Number of random squares summed into every instance.
SQUARES = 2


def _random_compatible(
    complex_: Complex1D, degree: int, rng: np.random.Generator
) -> PiecewisePoly:
    """A random continuous function of degree at most ``degree``."""
    values = np.zeros(complex_.m + 1)
    if degree == 0:
        for sub in components(complex_):
            values[list(sub.vertex_map)] = rng.normal()
    else:
        values[1:] = rng.normal(size=complex_.m)

    polys = []
    for i, j in complex_.edges:
        p = Poly.linear_interpolant(float(values[i]), float(values[j]))
        if degree >= 2:
            p = p + WEIGHT * Poly.of(rng.normal(size=degree - 1))
        polys.append(p)
    return PiecewisePoly(
        complex_, tuple(polys), tuple(float(values[v]) for v in complex_.isolated)
    )


def random_nonneg(complex_: Complex1D, degree: int, seed: int) -> PiecewisePoly:
    """A function nonnegative by construction, reproducible from ``seed``.

    ``F = sum G_k^2 + sum_E (u^2 + v^2) T_i T_j`` with random continuous
    ``G_k`` of degree at most ``degree // 2`` and random ``u``, ``v`` of
    degree at most ``(degree - 2) // 2``, so ``deg F <= degree``.

    Raises:
        ValueError: If ``degree`` is negative
    """
    if degree < 0:
        raise ValueError(f"degree must be nonnegative, got {degree}")
    rng = np.random.default_rng(seed)

    f = zero(complex_)
    for _ in range(SQUARES):
        g = _random_compatible(complex_, degree // 2, rng)
        f = f + g * g

    if degree >= 2:
        n = (degree - 2) // 2 + 1
        polys = []
        for _ in complex_.edges:
            u = Poly.of(rng.normal(size=n))
            v = Poly.of(rng.normal(size=n))
            polys.append((u * u + v * v) * WEIGHT * 0.25)
        f = f + PiecewisePoly(complex_, tuple(polys), tuple(0.0 for _ in complex_.isolated))
    logger.debug("random_nonneg: seed=%d degree=%s", seed, f.degree)
    return f
