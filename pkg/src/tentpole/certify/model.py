"""Certificate data model."""

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field, replace

from tentpole.poly import NEG_INF_DEGREE
from tentpole.pwpoly import PiecewisePoly
from tentpole.simplicial import Complex1D, Edge


def _degree_or_none(x: float) -> int | None:
    return None if x == NEG_INF_DEGREE else int(x)


@dataclass
class CertificateMeta:
    input_degree: float = NEG_INF_DEGREE
    certificate_degree: float = NEG_INF_DEGREE
    residual: float | None = None
    square_count: int = 0

    def to_dict(self) -> dict:
        return {
            "input_degree": _degree_or_none(self.input_degree),
            "certificate_degree": _degree_or_none(self.certificate_degree),
            "residual": self.residual,
            "square_count": self.square_count,
        }


@dataclass(frozen=True)
class Certificate:
    """``F = sum(s^2 for s in s_roots) + sum_E sum(r^2 for r in edge_terms[E]) T_i T_j``."""

    complex: Complex1D
    s_roots: tuple[PiecewisePoly, ...]
    edge_terms: Mapping[Edge, tuple[PiecewisePoly, ...]]
    meta: CertificateMeta = field(default_factory=CertificateMeta)

    @property
    def is_exact(self) -> bool:
        return all(r.is_exact for r in self.roots())

    def roots(self) -> list[PiecewisePoly]:
        out = list(self.s_roots)
        for edge in sorted(self.edge_terms):
            out.extend(self.edge_terms[edge])
        return out

    def to_exact(self) -> "Certificate":
        return self._map(lambda r: r.to_exact())

    def to_float(self) -> "Certificate":
        return self._map(lambda r: r.to_float())

    def _map(self, fn: Callable[[PiecewisePoly], PiecewisePoly]) -> "Certificate":
        return replace(
            self,
            s_roots=tuple(fn(r) for r in self.s_roots),
            edge_terms={e: tuple(fn(r) for r in roots) for e, roots in self.edge_terms.items()},
        )

    @property
    def degree(self) -> float:
        """Largest degree among the squares ``s^2`` and the multipliers ``S_ij``."""
        return max((2 * r.degree for r in self.roots()), default=NEG_INF_DEGREE)
