"""Root finding and interval minimisation."""

import logging

import numpy as np
import numpy.polynomial.polynomial as npp
import scipy.linalg

from tentpole.errors import RootFindingError
from tentpole.poly.core import Poly, from_roots, sup_distance
from tentpole.settings import ToleranceSettings, resolve_tolerances

logger = logging.getLogger(__name__)

_POLISH_STEPS = 4


def _polish(coeffs: np.ndarray, deriv: np.ndarray, root: complex) -> complex:
    """Newton refinement, accepting only steps that shrink |p|."""
    value = abs(npp.polyval(root, coeffs))
    for _ in range(_POLISH_STEPS):
        slope = npp.polyval(root, deriv)
        if slope == 0 or value == 0:
            break
        candidate = root - npp.polyval(root, coeffs) / slope
        candidate_value = abs(npp.polyval(candidate, coeffs))
        if not candidate_value < value:
            break
        root, value = candidate, candidate_value
    return complex(root)


def pair_conjugates(raw: np.ndarray, pair_tol: float) -> list[complex]:
    """Project near-real roots to the axis and match the rest in conjugate pairs.

    Roots with ``|Im| <= pair_tol * (1 + |root|)`` become real. The remaining
    upper and lower half-plane roots are matched greedily by distance between
    the upper root and the conjugate of the lower one; each pair is replaced
    by its symmetrised centre. Unmatched leftovers are projected to the axis.

    Returns:
        Real roots in ascending order followed by ``(z, conj(z))`` pairs with
        ``Im z > 0``.
    """
    real: list[float] = []
    upper: list[complex] = []
    lower: list[complex] = []
    for z in raw:
        z = complex(z)
        if abs(z.imag) <= pair_tol * (1 + abs(z)):
            real.append(z.real)
        elif z.imag > 0:
            upper.append(z)
        else:
            lower.append(z)

    pairs: list[complex] = []
    if upper and lower:
        u = np.array(upper)
        lo = np.conj(np.array(lower))
        dist = np.abs(u[:, None] - lo[None, :])
        used_u: set[int] = set()
        used_l: set[int] = set()
        for _ in range(min(len(upper), len(lower))):
            i, j = np.unravel_index(np.argmin(dist), dist.shape)
            centre = 0.5 * (u[i] + lo[j])
            pairs.append(complex(centre.real, abs(centre.imag)))
            dist[i, :] = np.inf
            dist[:, j] = np.inf
            used_u.add(int(i))
            used_l.add(int(j))
        real.extend(upper[i].real for i in range(len(upper)) if i not in used_u)
        real.extend(lower[j].real for j in range(len(lower)) if j not in used_l)
    else:
        real.extend(z.real for z in upper + lower)

    out: list[complex] = [complex(x, 0.0) for x in sorted(real)]
    for z in sorted(pairs, key=lambda w: (w.real, w.imag)):
        out.extend((z, z.conjugate()))
    return out


def roots(p: Poly, tol: ToleranceSettings | None = None) -> list[complex]:
    """All complex roots of ``p`` with multiplicity.

    Roots are eigenvalues of the balanced companion matrix of the monic
    normalisation, each polished by a few Newton steps. For real input the
    result is conjugate-symmetric (see ``pair_conjugates``).

    Args:
        p: Polynomial of degree at least one
        tol: Tolerances (``roots`` per degree bounds the reconstruction
            residual, ``pair`` controls real projection)

    Returns:
        ``deg(p)`` roots

    Raises:
        ValueError: If ``p`` is constant
        RootFindingError: If ``lead * prod(t - root)`` differs from ``p`` by more
            than ``tol.roots * deg(p)`` relative to ``|lead| * prod(t + |root|)``
    """
    tol = resolve_tolerances(tol)
    p = p.to_float()
    if p.degree < 1:
        raise ValueError(f"roots() needs degree >= 1, got {p.degree}")

    coeffs = p.coeffs
    companion = npp.polycompanion(coeffs)
    balanced, _ = scipy.linalg.matrix_balance(companion, permute=True, separate=False)
    eig = scipy.linalg.eigvals(balanced)
    if not np.all(np.isfinite(eig)):
        raise RootFindingError("eigenvalue solver returned non-finite roots", residual=np.inf)

    deriv = npp.polyder(coeffs)
    polished = np.array([_polish(coeffs, deriv, z) for z in eig])
    result = pair_conjugates(polished, tol.pair) if p.is_real else [complex(z) for z in polished]

    rebuilt = from_roots(result, p.lead)
    if p.is_real:
        rebuilt = rebuilt.real
    # |lead| * prod(t + |root|) dominates every coefficient of the re-expansion
    conditioning = from_roots([-abs(z) for z in result], abs(p.lead)).norm()
    residual = float(sup_distance(rebuilt, p)) / conditioning
    limit = tol.roots * p.degree
    if residual > limit:
        raise RootFindingError(
            f"root reconstruction residual {residual:.3e} exceeds {limit:.1e}",
            residual=residual,
        )
    logger.debug("roots: degree=%s residual=%.2e", p.degree, residual)
    return result


def min_on_interval(p: Poly, tol: ToleranceSettings | None = None) -> tuple[float, float]:
    """Global minimum of a real polynomial on ``[-1, 1]``.

    Candidates are both endpoints and the real part of every critical point
    lying in the interval; using real parts of all critical points (not just
    those classified as real) only adds genuine evaluation points.

    Returns:
        ``(min_value, argmin)``
    """
    p = p.to_float()
    if p.degree < 1:
        return float(p(-1.0)) if not p.is_zero else 0.0, -1.0

    candidates = [-1.0, 1.0]
    if p.degree >= 2:
        for z in roots(p.derivative(), tol):
            if -1.0 < z.real < 1.0:
                candidates.append(z.real)
    xs = np.array(candidates)
    values = np.real(p(xs))
    k = int(np.argmin(values))
    return float(values[k]), float(xs[k])
