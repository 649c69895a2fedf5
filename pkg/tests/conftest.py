"""Pytest configuration and fixtures."""

import os
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

# Set test environment
os.environ.setdefault("TENTPOLE_LOGGING__LEVEL", "WARNING")

from tentpole.interval import WEIGHT  # noqa: E402
from tentpole.poly import Poly  # noqa: E402
from tentpole.pwpoly import PiecewisePoly, make  # noqa: E402
from tentpole.simplicial import Complex1D, validate  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    """Return path to the shipped JSON documents."""
    return FIXTURES


@pytest.fixture
def schemas_dir():
    """Return path to schemas directory."""
    return Path(__file__).parent.parent / "schemas"


@pytest.fixture
def triangle() -> Complex1D:
    """The boundary of a triangle."""
    return validate(3, [[1, 2], [1, 3], [2, 3]])


@pytest.fixture
def path3() -> Complex1D:
    """Two edges 1-2-3 sharing vertex 2."""
    return validate(3, [[1, 2], [2, 3]])


@pytest.fixture
def star() -> Complex1D:
    """Three edges at vertex 1 plus an isolated vertex 5."""
    return validate(5, [[1, 2], [1, 3], [1, 4]])


@pytest.fixture
def triangle_f(triangle) -> PiecewisePoly:
    """``1 - 4T1T2 - 4T1T3 - 4T2T3``, which is ``t^2`` on every edge (exact)."""
    t2 = Poly.of([Fraction(0), Fraction(0), Fraction(1)])
    return make(triangle, [t2, t2, t2])


def random_complex(rng: np.random.Generator, max_m: int = 7, max_e: int = 6) -> Complex1D:
    """A random connected complex: a random spanning tree plus extra edges."""
    m = int(rng.integers(2, max_m + 1))
    order = rng.permutation(np.arange(1, m + 1))
    edges = {
        tuple(sorted((int(order[k]), int(order[rng.integers(0, k)])))) for k in range(1, m)
    }
    candidates = [(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]
    rng.shuffle(candidates)
    for edge in candidates:
        if len(edges) >= max_e:
            break
        if rng.random() < 0.3:
            edges.add(tuple(int(v) for v in edge))
    return validate(m, sorted(edges))


def random_compatible(
    complex_: Complex1D, degree: int, rng: np.random.Generator
) -> PiecewisePoly:
    """A random continuous function of degree at most ``degree`` (float)."""
    values = rng.normal(size=complex_.m + 1)
    polys = []
    for i, j in complex_.edges:
        p = Poly.linear_interpolant(float(values[i]), float(values[j]))
        if degree >= 2:
            p = p + WEIGHT * Poly.of(rng.normal(size=degree - 1))
        polys.append(p)
    return make(complex_, polys, [float(values[v]) for v in complex_.isolated])
