"""Polynomials in the tent variables and conversion to and from edge form."""

import logging
import math
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from tentpole.poly import NEG_INF_DEGREE, Poly
from tentpole.poly.core import Scalar
from tentpole.pwpoly.function import PiecewisePoly
from tentpole.settings import ToleranceSettings, resolve_tolerances
from tentpole.simplicial import Complex1D

logger = logging.getLogger(__name__)

# A monomial is a sorted tuple of (vertex, power) pairs with power >= 1;
# the empty tuple is the constant monomial.
Monomial = tuple[tuple[int, int], ...]


def monomial(powers: Mapping[int, int]) -> Monomial:
    return tuple(sorted((v, p) for v, p in powers.items() if p))


@dataclass(frozen=True)
class TentPoly:
    """A sparse polynomial ``G(T_1, ..., T_m)``."""

    terms: Mapping[Monomial, Scalar] = field(default_factory=dict)

    @classmethod
    def of(cls, items: Iterable[tuple[Monomial, Scalar]]) -> "TentPoly":
        """Collect like monomials and drop zero coefficients."""
        acc: dict[Monomial, Scalar] = {}
        for mono, c in items:
            acc[mono] = acc.get(mono, 0) + c
        return cls({mono: c for mono, c in sorted(acc.items()) if c != 0})

    @property
    def degree(self) -> float:
        """Tent degree: the largest total degree of a stored monomial."""
        return max((sum(p for _, p in mono) for mono in self.terms), default=NEG_INF_DEGREE)

    @property
    def variables(self) -> set[int]:
        return {v for mono in self.terms for v, _ in mono}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (sum(p for _, p in kv[0]), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for mono, c in self.items():
            factors = "*".join(f"T{v}" if p == 1 else f"T{v}^{p}" for v, p in mono)
            if not factors:
                body = str(c)
            elif c == 1:
                body = factors
            elif c == -1:
                body = f"-{factors}"
            else:
                body = f"{c}*{factors}"
            out.append(body)
        return " + ".join(out).replace("+ -", "- ")


def from_tent(complex_: Complex1D, g: TentPoly) -> PiecewisePoly:
    """Substitute the tent functions for the variables of ``g``.

    On an edge ``(i, j)`` only ``T_i = (1-t)/2`` and ``T_j = (1+t)/2`` are
    nonzero, and on an isolated vertex ``v`` only ``T_v = 1``; every other
    monomial vanishes there.

    Raises:
        ValueError: If ``g`` uses a variable outside ``1..m``
    """
    outside = [v for v in g.variables if not 1 <= v <= complex_.m]
    if outside:
        raise ValueError(f"tent variable T{min(outside)} out of range 1..{complex_.m}")

    exact = all(isinstance(c, Fraction | int) for c in g.terms.values())
    half: Scalar = Fraction(1, 2) if exact else 0.5
    zero_value: Scalar = Fraction(0) if exact else 0.0
    left_hat = Poly.of([half, -half])
    right_hat = Poly.of([half, half])

    polys = []
    for i, j in complex_.edges:
        total = Poly.zero()
        for mono, c in g.terms.items():
            powers = dict(mono)
            if set(powers) - {i, j}:
                continue
            term = (left_hat ** powers.get(i, 0)) * (right_hat ** powers.get(j, 0))
            total = total + term * (Fraction(c) if exact else float(c))
        polys.append(total)

    values = []
    for v in complex_.isolated:
        value = zero_value
        for mono, c in g.terms.items():
            if all(u == v for u, _ in mono):
                value = value + (Fraction(c) if exact else float(c))
        values.append(value)
    return PiecewisePoly(complex_, tuple(polys), tuple(values))


def _constant_choice(values: list[Scalar], tol: float) -> Scalar:
    """The constant that leaves the fewest terms, preferring 0 on ties."""
    best: Scalar = 0
    best_count = sum(abs(x) > tol for x in values)
    for c in sorted(set(values), key=lambda x: (abs(x), x)):
        if abs(c) <= tol:
            continue
        count = 1 + sum(abs(x - c) > tol for x in values)
        if count < best_count:
            best, best_count = c, count
    return best


def to_tent(f: PiecewisePoly, tol: ToleranceSettings | None = None) -> TentPoly:
    """A tent-variable representative of ``f``.

    Built as ``c + sum (F(v) - c) T_v + sum_E 4 T_i T_j h_ij(T_j - T_i)``,
    where on each edge ``f - (linear vertex interpolant) = (1 - t^2) h_ij(t)``
    and ``T_j - T_i = t`` there. Monomials have the shapes ``c``, ``c T_i``
    and ``c T_i^a T_j^b`` with ``(i, j)`` an edge.
    """
    tol = resolve_tolerances(tol)
    exact = f.is_exact
    scale = f.norm()
    drop = 0.0 if exact else tol.compat * (1 + scale)

    values = f.vertex_values()
    c = _constant_choice(list(values.values()), drop)
    items: list[tuple[Monomial, Scalar]] = [((), c)]
    for v, value in values.items():
        if abs(value - c) > drop:
            items.append((((v, 1),), value - c))

    for (i, j), p in zip(f.complex.edges, f.edge_polys):
        if p.is_zero:
            deviation = p
        else:
            left = p(Fraction(-1)) if exact else float(p(-1.0))
            right = p(Fraction(1)) if exact else float(p(1.0))
            deviation = p - Poly.linear_interpolant(left, right)
        h, remainder = deviation.divmod_weight()
        if not exact and remainder.norm() > drop:
            logger.warning("edge %d-%d: division remainder %.2e discarded", i, j, remainder.norm())
        for k, hk in enumerate(h.coeffs):
            if abs(hk) <= (0 if exact else tol.trim * (1 + scale)):
                continue
            # 4 T_i T_j h_k (T_j - T_i)^k, expanded binomially
            for a in range(k + 1):
                coeff = 4 * hk * math.comb(k, a) * (-1) ** (k - a)
                items.append((((i, 1 + k - a), (j, 1 + a)), coeff))
    return TentPoly.of(items)

