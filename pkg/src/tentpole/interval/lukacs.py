"""Nonnegative polynomials on [-1, 1]: Markov-Lukacs and KMS forms.

The Markov-Lukacs form is built from the root factorisation of ``f``. Every
irreducible factor that is nonnegative on the interval has an explicit
form, and forms multiply through the composition identities

    even * even:  (p1 p2 - w q1 q2)^2 + w (p1 q2 + p2 q1)^2,   w = 1 - t^2
    odd * even:   (1+t)(p P - (1-t) q Q)^2 + (1-t)(q P + (1+t) p Q)^2
    odd * odd:    ((1+t) p1 p2 + (1-t) q1 q2)^2 + w (p1 q2 - q1 p2)^2

so degrees stay sharp: ``deg p <= m`` and ``deg q <= m - 1`` for degree
``2m``, ``deg p, deg q <= m`` for degree ``2m + 1``.
"""

import logging
import math
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from tentpole.errors import NotNonnegative, SosConstructionError
from tentpole.poly import Poly, min_on_interval, roots, sup_distance
from tentpole.settings import ToleranceSettings, resolve_tolerances

logger = logging.getLogger(__name__)

WEIGHT = Poly.of([1.0, 0.0, -1.0])
ONE_PLUS_T = Poly.of([1.0, 1.0])
ONE_MINUS_T = Poly.of([1.0, -1.0])
_SQRT_HALF = math.sqrt(0.5)
_REFINE_STEPS = 3


class Parity(StrEnum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class LukacsForm:
    """``p^2 + (1-t^2) q^2`` (even) or ``(1+t) p^2 + (1-t) q^2`` (odd)."""

    p: Poly
    q: Poly
    parity: Parity

    def expand(self) -> Poly:
        if self.parity is Parity.EVEN:
            return self.p * self.p + WEIGHT * (self.q * self.q)
        return ONE_PLUS_T * (self.p * self.p) + ONE_MINUS_T * (self.q * self.q)

    def scaled(self, c: float) -> "LukacsForm":
        return LukacsForm(self.p * c, self.q * c, self.parity)

    def __mul__(self, other: "LukacsForm") -> "LukacsForm":
        a, b = self, other
        if a.parity is Parity.EVEN and b.parity is Parity.EVEN:
            return LukacsForm(
                a.p * b.p - WEIGHT * (a.q * b.q), a.p * b.q + b.p * a.q, Parity.EVEN
            )
        if a.parity is Parity.ODD and b.parity is Parity.ODD:
            return LukacsForm(
                ONE_PLUS_T * (a.p * b.p) + ONE_MINUS_T * (a.q * b.q),
                a.p * b.q - a.q * b.p,
                Parity.EVEN,
            )
        odd, even = (a, b) if a.parity is Parity.ODD else (b, a)
        return LukacsForm(
            odd.p * even.p - ONE_MINUS_T * (odd.q * even.q),
            odd.q * even.p + ONE_PLUS_T * (odd.p * even.q),
            Parity.ODD,
        )


@dataclass(frozen=True)
class TwoSquareForm:
    """The sum of two squares ``u^2 + v^2``."""

    u: Poly
    v: Poly

    @classmethod
    def zero(cls) -> "TwoSquareForm":
        return cls(Poly.zero(), Poly.zero())

    def expand(self) -> Poly:
        return self.u * self.u + self.v * self.v

    @property
    def degree(self) -> float:
        return self.expand().degree

    @property
    def is_zero(self) -> bool:
        return self.u.is_zero and self.v.is_zero

    def __call__(self, x: float) -> float:
        return float(self.u(x) ** 2 + self.v(x) ** 2)


@dataclass(frozen=True)
class KmsForm:
    """``f = s0 + s1 (1 - t^2)`` with ``s0``, ``s1`` sums of two squares."""

    s0: TwoSquareForm
    s1: TwoSquareForm

    def expand(self) -> Poly:
        return self.s0.expand() + WEIGHT * self.s1.expand()


def _quadratic_form(centre: float, height_sq: float) -> LukacsForm:
    """Even form of ``(t - a)^2 + b2``, ``b2 > 0``, with ``q`` constant.

    Solves ``alpha^2 - g = 1``, ``alpha beta = -a``, ``beta^2 + g = a^2 + b2``
    for ``g = q^2``.
    """
    a, b2 = centre, height_sq
    lin = a * a + b2 - 1.0
    disc = math.sqrt(lin * lin + 4.0 * b2)
    g = 0.5 * (lin + disc) if lin >= 0 else 2.0 * b2 / (disc - lin)
    alpha = math.sqrt(1.0 + g)
    return LukacsForm(Poly.of([-a / alpha, alpha]), Poly.of([math.sqrt(g)]), Parity.EVEN)


def _linear_form(root: float) -> tuple[LukacsForm, int]:
    """Odd form of the sign-adjusted linear factor ``sign * (t - root)``.

    Returns:
        ``(form, sign)`` where ``sign * (t - root) >= 0`` on ``[-1, 1]``
    """
    sign = 1 if root <= 0 else -1
    at_plus = sign * (1.0 - root)
    at_minus = sign * (-1.0 - root)
    p = math.sqrt(max(at_plus, 0.0) / 2.0)
    q = math.sqrt(max(at_minus, 0.0) / 2.0)
    return LukacsForm(Poly.of([p]), Poly.of([q]), Parity.ODD), sign


def _refine(form: LukacsForm, f: Poly) -> LukacsForm:
    """Gauss-Newton polish of ``(p, q)`` against the coefficients of ``f``.

    The expansion is linearised as ``2 w_p p dp + 2 w_q q dq``, with
    ``(w_p, w_q)`` the two weights of the form, and each correction is the
    least-squares solution on the coefficient vector. A step is kept only
    when it shrinks the residual.
    """
    if form.parity is Parity.EVEN:
        weights = (Poly.of([1.0]), WEIGHT)
    else:
        weights = (ONE_PLUS_T, ONE_MINUS_T)
    best = form
    best_residual = float(sup_distance(form.expand(), f))
    for _ in range(_REFINE_STEPS):
        if best_residual == 0.0:
            break
        p, q = best.p.to_float().real, best.q.to_float().real
        columns: list[np.ndarray] = []
        for factor, weight in ((p, weights[0]), (q, weights[1])):
            if factor.is_zero:
                continue
            base = (weight * factor).coeffs * 2.0
            for k in range(len(factor.coeffs)):
                columns.append(np.concatenate([np.zeros(k), base]))
        target = (f - best.expand()).coeffs
        rows = max([len(target), *(len(c) for c in columns)])
        jac = np.zeros((rows, len(columns)))
        for j, column in enumerate(columns):
            jac[: len(column), j] = column
        rhs = np.zeros(rows)
        rhs[: len(target)] = target
        delta, *_ = np.linalg.lstsq(jac, rhs, rcond=None)

        n_p = len(p.coeffs) if not p.is_zero else 0
        dp, dq = delta[:n_p], delta[n_p:]
        candidate = LukacsForm(
            Poly.of(p.coeffs + dp) if n_p else p,
            Poly.of(q.coeffs + dq) if len(dq) else q,
            best.parity,
        )
        residual = float(sup_distance(candidate.expand(), f))
        if not residual < best_residual:
            break
        best, best_residual = candidate, residual
    return best


def _check_nonneg(f: Poly, ref: float, tol: ToleranceSettings) -> None:
    value, point = min_on_interval(f, tol)
    if value < -tol.nonneg * ref:
        raise NotNonnegative(
            f"polynomial takes value {value:.3e} at t={point:.6f}", value=value, point=point
        )


def lukacs_decompose(
    f: Poly, tol: ToleranceSettings | None = None, scale: float | None = None
) -> LukacsForm:
    """Markov-Lukacs representation of a polynomial nonnegative on ``[-1, 1]``.

    Args:
        f: Real polynomial
        tol: Tolerances (``nonneg``, ``pair``, ``roots``, ``sos``)
        scale: Reference magnitude for tolerances; defaults to ``|f|``. Callers
            working on remainders pass the magnitude of the original input,
            which may be far below the coefficient size of the remainder.

    Returns:
        A ``LukacsForm`` whose parity is that of ``deg f``

    Raises:
        NotNonnegative: If ``f`` dips below ``-tol.nonneg * scale``, or an odd
            number of real roots lies inside the interval
        SosConstructionError: If the expansion misses ``f`` by more than
            ``tol.sos * scale``
    """
    tol = resolve_tolerances(tol)
    f = f.to_float().real
    ref = f.norm() if scale is None else scale
    if f.is_zero or f.norm() <= tol.trim * ref:
        return LukacsForm(Poly.zero(), Poly.zero(), Parity.EVEN)

    _check_nonneg(f, ref, tol)
    if f.degree == 0:
        return LukacsForm(Poly.of([math.sqrt(max(float(f.lead), 0.0))]), Poly.zero(), Parity.EVEN)

    form = LukacsForm(Poly.of([1.0]), Poly.zero(), Parity.EVEN)
    constant = float(f.lead)
    interior: list[float] = []
    for z in roots(f, tol):
        if z.imag > 0:
            form = form * _quadratic_form(z.real, z.imag**2)
            continue
        if z.imag < 0:
            continue
        r = z.real
        edge_slack = tol.pair * (1 + abs(r))
        if abs(r) >= 1.0 - edge_slack:
            factor, sign = _linear_form(math.copysign(max(abs(r), 1.0), r))
            form = form * factor
            constant *= sign
        else:
            interior.append(r)

    interior.sort()
    if len(interior) % 2:
        centre = _odd_cluster_centre(interior, tol.pair)
        raise NotNonnegative(
            f"simple interior root near t={centre:.6f}", value=float(f(centre)), point=centre
        )
    for r1, r2 in zip(interior[::2], interior[1::2]):
        form = form * LukacsForm(Poly.of([-(r1 + r2) / 2, 1.0]), Poly.zero(), Parity.EVEN)

    if constant <= 0:
        raise NotNonnegative(
            "leading factor is negative on the interval", value=constant, point=None
        )
    form = _refine(form.scaled(math.sqrt(constant)), f)

    residual = float(sup_distance(form.expand(), f))
    if residual > tol.sos * ref:
        raise SosConstructionError(
            f"Lukacs form residual {residual:.3e} exceeds {tol.sos * ref:.3e}", residual=residual
        )
    logger.debug("lukacs: degree=%s parity=%s residual=%.2e", f.degree, form.parity, residual)
    return form


def _odd_cluster_centre(points: list[float], pair_tol: float) -> float:
    clusters: list[list[float]] = [[points[0]]]
    for x in points[1:]:
        if x - clusters[-1][-1] <= pair_tol * (1 + abs(x)):
            clusters[-1].append(x)
        else:
            clusters.append([x])
    for cluster in clusters:
        if len(cluster) % 2:
            return sum(cluster) / len(cluster)
    return points[0]


def kms_form(
    f: Poly, tol: ToleranceSettings | None = None, scale: float | None = None
) -> KmsForm:
    """Representation ``f = s0 + s1 (1 - t^2)`` with two-square ``s0``, ``s1``.

    Odd-degree Lukacs forms are converted with
    ``1 +- t = (1 +- t)^2 / 2 + (1 - t^2) / 2``. The degree bounds
    ``deg s0 <= deg f + 1`` and ``deg s1 <= deg f - 1`` hold by construction.

    Raises:
        NotNonnegative: As in ``lukacs_decompose``
        SosConstructionError: As in ``lukacs_decompose``
    """
    form = lukacs_decompose(f, tol, scale)
    if form.parity is Parity.EVEN:
        return KmsForm(TwoSquareForm(form.p, Poly.zero()), TwoSquareForm(form.q, Poly.zero()))
    return KmsForm(
        TwoSquareForm(ONE_PLUS_T * form.p * _SQRT_HALF, ONE_MINUS_T * form.q * _SQRT_HALF),
        TwoSquareForm(form.p * _SQRT_HALF, form.q * _SQRT_HALF),
    )
