"""Square roots with prescribed boundary values and the iterated adaptation."""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from tentpole.errors import BoundaryInfeasible, RemainderNegative, SosConstructionError
from tentpole.interval.lukacs import WEIGHT, TwoSquareForm, kms_form
from tentpole.poly import Poly, min_on_interval, sum_of_squares, sup_distance
from tentpole.settings import ToleranceSettings, resolve_tolerances

logger = logging.getLogger(__name__)

# Dominance of s^2 by f is checked on this many equispaced points.
GRID_POINTS = 1001

_GRID = np.linspace(-1.0, 1.0, GRID_POINTS)
_LEFT_HAT = Poly.of([0.5, -0.5])
_RIGHT_HAT = Poly.of([0.5, 0.5])


class MatchMode(StrEnum):
    """Which interval ends carry prescribed values in ``adapt_sos``."""

    BOTH_ENDS = "both_ends"
    RIGHT_END_ONLY = "right_end_only"
    LEFT_END_ONLY = "left_end_only"

    @property
    def left(self) -> bool:
        return self in (MatchMode.BOTH_ENDS, MatchMode.LEFT_END_ONLY)

    @property
    def right(self) -> bool:
        return self in (MatchMode.BOTH_ENDS, MatchMode.RIGHT_END_ONLY)


@dataclass(frozen=True)
class AdaptResult:
    """``f = sum(s_i^2) + r (1 - t^2)``."""

    squares: tuple[Poly, ...]
    remainder: TwoSquareForm

    def expand(self) -> Poly:
        return sum_of_squares(self.squares) + WEIGHT * self.remainder.expand()


def _complex_factor(s0: TwoSquareForm) -> Poly:
    n = max(len(s0.u.coeffs), len(s0.v.coeffs))
    c = np.zeros(n, dtype=np.complex128)
    c[: len(s0.u.coeffs)] += s0.u.coeffs
    c[: len(s0.v.coeffs)] += 1j * s0.v.coeffs
    return Poly.of(c)


def boundary_matched_sqrt(
    f: Poly,
    a: float | None,
    b: float | None,
    tol: ToleranceSettings | None = None,
    scale: float | None = None,
) -> Poly:
    """A polynomial ``s`` with ``s(-1) = a``, ``s(1) = b`` and ``s^2 <= f``.

    ``s0`` of the KMS form of ``f`` is written as ``|g|^2`` with
    ``g = u + i v``; with unimodular phases taken from ``g(+-1)`` the result
    is ``Re(g * l)`` where ``l`` interpolates ``a / |g(-1)|`` and
    ``b / |g(1)|`` linearly (conjugated by the phases). Since
    ``|l| <= 1`` on the interval, ``s^2 <= |g|^2 = s0 <= f``.

    Args:
        f: Polynomial nonnegative on ``[-1, 1]``
        a: Value at ``t = -1``, or ``None`` to leave that end free
        b: Value at ``t = 1``, or ``None`` to leave that end free
        tol: Tolerances (``bnd``, ``interp``, ``dom`` and those of ``kms_form``)
        scale: Reference magnitude; defaults to ``|f|``

    Returns:
        ``s`` with ``deg(s^2) <= deg(f) + 3``

    Raises:
        BoundaryInfeasible: If ``a^2 > f(-1) + eps`` or ``b^2 > f(1) + eps``
        SosConstructionError: If interpolation or grid dominance fails
    """
    tol = resolve_tolerances(tol)
    f = f.to_float().real
    ref = f.norm() if scale is None else scale
    if f.is_zero:
        return Poly.zero()

    eps_bnd = tol.bnd * (1 + ref)
    ends = ((-1, a, _LEFT_HAT), (1, b, _RIGHT_HAT))
    for end, target, _ in ends:
        if target is None:
            continue
        bound = float(f(float(end)))
        if target * target > bound + eps_bnd:
            raise BoundaryInfeasible(
                f"boundary value {target!r} exceeds sqrt(f({end})) = {math.sqrt(max(bound, 0))!r}",
                end=end,
                value=float(target),
                bound=bound,
            )

    g = _complex_factor(kms_form(f, tol, scale=ref).s0)
    ell = Poly.zero()
    correction = Poly.zero()
    for end, target, hat in ends:
        if target is None:
            continue
        value = complex(g(float(end)))
        magnitude = abs(value)
        if float(f(float(end))) <= eps_bnd or magnitude == 0.0:
            # degenerate end: the l term is dropped, target is ~0
            correction = correction + hat * float(target)
            continue
        ratio = min(max(float(target) / magnitude, -1.0), 1.0)
        ell = ell + hat * (value.conjugate() / magnitude * ratio)
        excess = float(target) - ratio * magnitude
        if excess:
            logger.debug("boundary value at %d clamped by %.2e", end, excess)
            correction = correction + hat * excess

    s = (g * ell).real + correction
    _check_sqrt(f, s, a, b, ref, tol)
    return s


def _check_sqrt(
    f: Poly, s: Poly, a: float | None, b: float | None, ref: float, tol: ToleranceSettings
) -> None:
    for end, target in ((-1.0, a), (1.0, b)):
        if target is None:
            continue
        miss = abs(float(s(end)) - float(target))
        if miss > tol.interp * (1 + ref):
            raise SosConstructionError(
                f"boundary value at t={end:+.0f} missed by {miss:.3e}", residual=miss
            )
    excess = float(np.max(s(_GRID) ** 2 - f(_GRID)))
    if excess > tol.dom * ref:
        raise SosConstructionError(
            f"square exceeds f by {excess:.3e} on the grid", residual=excess
        )


def adapt_sos(
    f: Poly,
    a: Sequence[float],
    b: Sequence[float],
    match: MatchMode = MatchMode.BOTH_ENDS,
    tol: ToleranceSettings | None = None,
    scale: float | None = None,
) -> AdaptResult:
    """Write ``f = s_1^2 + ... + s_{k+2}^2 + r (1 - t^2)`` with matched ends.

    The first ``k`` squares take the prescribed values ``a_i`` at ``-1`` and
    ``b_i`` at ``1`` (on the matched ends only); when the squared norms of
    ``a`` and ``b`` equal ``f(-1)`` and ``f(1)``, the last two squares vanish
    there. Each step applies ``boundary_matched_sqrt`` to the running
    remainder, and a final ``kms_form`` splits what is left.

    Args:
        f: Polynomial nonnegative on ``[-1, 1]``
        a: ``k`` values at ``t = -1`` (ignored unless the left end is matched)
        b: ``k`` values at ``t = 1`` (ignored unless the right end is matched)
        match: Matched ends
        tol: Tolerances
        scale: Reference magnitude for every tolerance; defaults to ``|f|``

    Raises:
        ValueError: If ``a`` and ``b`` have different lengths
        BoundaryInfeasible: If a matched end has ``sum(a_i^2) != f(end)``
        RemainderNegative: If a running remainder dips below
            ``-tol.nonneg * |f|``
        SosConstructionError: If the final expansion misses ``f``
    """
    tol = resolve_tolerances(tol)
    if len(a) != len(b):
        raise ValueError(f"boundary vectors differ in length: {len(a)} != {len(b)}")
    k = len(a)
    f = f.to_float().real
    ref = max(f.norm(), scale or 0.0)
    if f.is_zero:
        return AdaptResult(tuple(Poly.zero() for _ in range(k + 2)), TwoSquareForm.zero())

    eps_bnd = tol.bnd * (1 + ref)
    for end, values, matched in ((-1, a, match.left), (1, b, match.right)):
        if not matched:
            continue
        total = float(sum(float(x) ** 2 for x in values))
        bound = float(f(float(end)))
        if abs(total - bound) > eps_bnd:
            raise BoundaryInfeasible(
                f"squared boundary norm {total!r} differs from f({end}) = {bound!r}",
                end=end,
                value=total,
                bound=bound,
            )

    squares: list[Poly] = []
    running = f
    for i in range(k):
        s = boundary_matched_sqrt(
            running,
            float(a[i]) if match.left else None,
            float(b[i]) if match.right else None,
            tol,
            scale=ref,
        )
        squares.append(s)
        running = (running - s * s).chop(tol.trim * ref)
        value, point = min_on_interval(running, tol)
        if value < -tol.nonneg * ref:
            raise RemainderNegative(
                f"remainder after step {i + 1} takes value {value:.3e}",
                step=i + 1,
                value=value,
                point=point,
            )
        logger.debug("adapt step %d: deg s^2=%s deg r=%s", i + 1, (s * s).degree, running.degree)

    last = kms_form(running, tol, scale=ref)
    squares.extend((last.s0.u, last.s0.v))
    result = AdaptResult(tuple(squares), last.s1)

    residual = float(sup_distance(result.expand(), f))
    if residual > tol.sos * ref:
        raise SosConstructionError(
            f"adapted form residual {residual:.3e} exceeds {tol.sos * ref:.3e}", residual=residual
        )
    return result
