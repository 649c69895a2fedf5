"""Verification of certificates by expansion."""

import logging
from dataclasses import dataclass, field

from tentpole.certify.model import Certificate
from tentpole.errors import ComplexMismatch
from tentpole.poly import NEG_INF_DEGREE
from tentpole.pwpoly import PiecewisePoly, restrict, sum_of_squares, tent
from tentpole.settings import ToleranceSettings, resolve_tolerances
from tentpole.simplicial import components, edge_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentReport:
    """Degree and count bookkeeping on one connected component."""

    vertices: tuple[int, ...]
    e: int
    m0: int
    input_degree: float
    certificate_degree: float
    degree_bound: float

    @property
    def degree_ok(self) -> bool:
        return self.certificate_degree <= self.degree_bound

    def to_dict(self) -> dict:
        def deg(x: float) -> int | None:
            return None if x == NEG_INF_DEGREE else int(x)

        return {
            "vertices": list(self.vertices),
            "e": self.e,
            "m0": self.m0,
            "input_degree": deg(self.input_degree),
            "certificate_degree": deg(self.certificate_degree),
            "degree_bound": deg(self.degree_bound),
            "degree_ok": self.degree_ok,
        }


@dataclass(frozen=True)
class VerifyReport:
    residual: float
    degree_ok: bool
    count_ok: bool
    exact: bool
    tolerance: float
    support_note: str = ""
    per_component: list[ComponentReport] = field(default_factory=list)

    @property
    def residual_ok(self) -> bool:
        return self.residual <= self.tolerance

    @property
    def passed(self) -> bool:
        return self.residual_ok and self.degree_ok and self.count_ok

    def to_dict(self) -> dict:
        return {
            "residual": self.residual,
            "residual_ok": self.residual_ok,
            "degree_ok": self.degree_ok,
            "count_ok": self.count_ok,
            "exact": self.exact,
            "passed": self.passed,
            "support_note": self.support_note,
            "per_component": [c.to_dict() for c in self.per_component],
        }


def expand(cert: Certificate) -> PiecewisePoly:
    """``S + sum_E S_ij T_i T_j`` as a piecewise polynomial."""
    c = cert.complex
    exact = cert.is_exact
    total = sum_of_squares(cert.s_roots, c)
    for (i, j), roots in sorted(cert.edge_terms.items()):
        if not c.has_edge((i, j)):
            continue
        total = total + sum_of_squares(roots, c) * tent(c, i, exact) * tent(c, j, exact)
    return total


def verify(
    f: PiecewisePoly,
    cert: Certificate,
    tol: ToleranceSettings | None = None,
    exact: bool | None = None,
) -> VerifyReport:
    """Check a certificate against ``f``.

    The residual is the largest absolute coefficient difference between the
    expansion and ``f``, over all edges and isolated vertices, divided by
    ``1 + |F|``. Degrees are bounded per connected component by
    ``deg(F|c) + 6(e_c - 1) + 1``, applied to ``s^2`` and ``S_ij``.

    Args:
        f: The certified function
        cert: The certificate
        tol: Tolerances (``cert``)
        exact: Force (``True``) or refuse (``False``) rational arithmetic;
            ``None`` uses it when both inputs are exact

    Raises:
        ComplexMismatch: If the certificate lives on another complex
    """
    tol = resolve_tolerances(tol)
    if cert.complex != f.complex:
        raise ComplexMismatch("certificate and function live on different complexes")

    if exact is None:
        exact = f.is_exact and cert.is_exact
    if exact:
        f, cert = f.to_exact(), cert.to_exact()
    else:
        f, cert = f.to_float(), cert.to_float()

    residual = (expand(cert) - f).norm() / (1 + f.norm())
    logger.debug("verification residual %.3e (exact=%s)", residual, exact)

    c = f.complex
    outside = sorted(edge for edge in cert.edge_terms if not c.has_edge(edge))
    note = ""
    if outside:
        keys = ", ".join(edge_key(edge) for edge in outside)
        note = f"edge terms on non-edges {keys} multiply T_iT_j = 0 and were ignored"

    count_ok = len(cert.s_roots) <= 2 * c.e + c.m0 and all(
        len(roots) <= 2 for roots in cert.edge_terms.values()
    )
    per_component = _component_reports(f, cert)
    return VerifyReport(
        residual=residual,
        degree_ok=all(r.degree_ok for r in per_component),
        count_ok=count_ok,
        exact=exact,
        tolerance=tol.cert,
        support_note=note,
        per_component=per_component,
    )


def _component_reports(f: PiecewisePoly, cert: Certificate) -> list[ComponentReport]:
    reports = []
    for sub in components(f.complex):
        local_f = restrict(f, sub)
        degrees = [2 * restrict(r, sub).degree for r in cert.s_roots]
        for edge, roots in cert.edge_terms.items():
            if sub.contains(edge[0]) and sub.contains(edge[1]):
                degrees.extend(2 * restrict(r, sub).degree for r in roots)
        e = sub.complex.e
        bound = local_f.degree + (6 * (e - 1) + 1 if e else 0)
        reports.append(
            ComponentReport(
                vertices=sub.vertex_map,
                e=e,
                m0=sub.complex.m0,
                input_degree=local_f.degree,
                certificate_degree=max(degrees, default=NEG_INF_DEGREE),
                degree_bound=bound,
            )
        )
    return reports
