"""Deciding nonnegativity of a piecewise polynomial."""

from dataclasses import dataclass
from enum import StrEnum

from tentpole.errors import NotNonnegative
from tentpole.poly import min_on_interval
from tentpole.pwpoly import PiecewisePoly
from tentpole.settings import ToleranceSettings, resolve_tolerances
from tentpole.simplicial import Edge, edge_key


class Verdict(StrEnum):
    NONNEG = "nonneg"
    MARGINAL = "marginal"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class Witness:
    """Where the minimum was found: a point ``t`` on an edge, or a vertex."""

    value: float
    edge: Edge | None = None
    t: float | None = None
    vertex: int | None = None

    def describe(self) -> str:
        if self.edge is not None:
            return f"edge {edge_key(self.edge)} t={self.t!r} value={self.value!r}"
        return f"vertex {self.vertex} value={self.value!r}"

    def to_dict(self) -> dict:
        out: dict = {"value": self.value}
        if self.edge is not None:
            out["edge"] = edge_key(self.edge)
            out["t"] = self.t
        else:
            out["vertex"] = self.vertex
        return out


@dataclass(frozen=True)
class NonnegReport:
    verdict: Verdict
    minimum: float
    witness: Witness | None
    scale: float

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.NEGATIVE

    def raise_if_negative(self) -> None:
        if self.verdict is Verdict.NEGATIVE and self.witness is not None:
            w = self.witness
            raise NotNonnegative(
                f"function is negative at {w.describe()}",
                value=w.value,
                point=w.t,
                edge=w.edge,
                vertex=w.vertex,
            )

    def to_dict(self) -> dict:
        return {
            "verdict": str(self.verdict),
            "minimum": self.minimum,
            "witness": self.witness.to_dict() if self.witness else None,
        }


def is_nonneg(f: PiecewisePoly, tol: ToleranceSettings | None = None) -> NonnegReport:
    """Minimum of ``f`` over its complex, classified against ``tol.nonneg``.

    The scale is ``1 + |F|``; a minimum in ``[-tol.nonneg * scale, 0)`` is
    reported as marginal.
    """
    tol = resolve_tolerances(tol)
    f = f.to_float()
    scale = 1.0 + f.norm()

    best: Witness | None = None
    for edge, p in zip(f.complex.edges, f.edge_polys):
        value, t = min_on_interval(p, tol)
        if best is None or value < best.value:
            best = Witness(value=value, edge=edge, t=t)
    for v, x in zip(f.complex.isolated, f.isolated_values):
        if best is None or float(x) < best.value:
            best = Witness(value=float(x), vertex=v)

    minimum = best.value if best is not None else 0.0
    if minimum >= 0:
        return NonnegReport(Verdict.NONNEG, minimum, None, scale)
    verdict = Verdict.MARGINAL if minimum >= -tol.nonneg * scale else Verdict.NEGATIVE
    return NonnegReport(verdict, minimum, best, scale)
