"""Construction of sums-of-squares certificates by edge peeling.

A certificate writes ``F = S + sum_E S_ij T_i T_j`` with ``S`` a sum of at
most ``2e + m0`` squares and each ``S_ij`` a sum of at most two squares. It
is built by induction on the number of edges: split off one edge, certify
the rest, and adapt the peeled edge polynomial to the boundary values of the
recursive square roots.
"""

import logging
import math
from collections.abc import Mapping, Sequence

from tentpole.certify.model import Certificate
from tentpole.certify.nonneg import Verdict, is_nonneg
from tentpole.certify.verify import verify
from tentpole.errors import CertificationError, MathematicalFailure
from tentpole.interval import MatchMode, adapt_sos, kms_form
from tentpole.poly import Poly
from tentpole.pwpoly import (
    PiecewisePoly,
    constant,
    extend_linear,
    glue,
    linear_extension,
    restrict,
    tent,
    zero,
)
from tentpole.settings import ToleranceSettings, resolve_tolerances
from tentpole.simplicial import Complex1D, Edge, components, edge_key, peel

logger = logging.getLogger(__name__)

# Recursion output: square roots of S, and square roots of each S_ij keyed
# by local edge.
_Parts = tuple[list[PiecewisePoly], dict[Edge, list[PiecewisePoly]]]


def certify(f: PiecewisePoly, tol: ToleranceSettings | None = None) -> Certificate:
    """Certify a nonnegative piecewise polynomial.

    Args:
        f: Function on its complex
        tol: Tolerances

    Returns:
        A certificate with ``meta`` filled in, including the verification
        residual

    Raises:
        NotNonnegative: If ``f`` is negative beyond ``tol.nonneg``
        CertificationError: If a construction step fails numerically; the
            peeled edge and the underlying error are attached
    """
    tol = resolve_tolerances(tol)
    f = f.to_float()
    report = is_nonneg(f, tol)
    report.raise_if_negative()
    if report.verdict is Verdict.MARGINAL and report.witness is not None:
        logger.warning(
            "input is marginally negative (%s); square roots at vertices are clamped",
            report.witness.describe(),
        )

    scale = 1.0 + f.norm()
    s_roots, terms = _certify(f, tuple(f.complex.vertices), tol, scale)
    cert = Certificate(
        f.complex,
        tuple(s_roots),
        {edge: tuple(terms[edge]) for edge in sorted(terms)},
    )
    result = verify(f, cert, tol)
    cert.meta.input_degree = f.degree
    cert.meta.certificate_degree = cert.degree
    cert.meta.residual = result.residual
    cert.meta.square_count = len(s_roots)
    logger.info(
        "certified: e=%d squares=%d degree=%s residual=%.2e",
        f.complex.e,
        len(s_roots),
        cert.degree,
        result.residual,
    )
    return cert


def _certify(
    f: PiecewisePoly, labels: tuple[int, ...], tol: ToleranceSettings, scale: float
) -> _Parts:
    c = f.complex
    parts = components(c)
    if len(parts) > 1:
        s_roots: list[PiecewisePoly] = []
        terms: dict[Edge, list[PiecewisePoly]] = {}
        for sub in parts:
            sub_labels = tuple(labels[v - 1] for v in sub.vertex_map)
            roots, sub_terms = _certify(restrict(f, sub), sub_labels, tol, scale)
            s_roots.extend(extend_linear(r, sub, c) for r in roots)
            for edge, edge_roots in sub_terms.items():
                terms[sub.global_edge(edge)] = [extend_linear(r, sub, c) for r in edge_roots]
        return s_roots, terms

    if c.e == 0:
        return [tent(c, v) * math.sqrt(max(float(f.vertex_value(v)), 0.0)) for v in c.isolated], {}

    if c.e == 1:
        edge = c.edges[0]
        try:
            kms = kms_form(f.edge_polys[0], tol, scale=scale)
        except MathematicalFailure as err:
            raise _wrap(err, edge, labels) from err
        return (
            [_on_edge(c, kms.s0.u), _on_edge(c, kms.s0.v)],
            {edge: [_on_edge(c, kms.s1.u * 2.0), _on_edge(c, kms.s1.v * 2.0)]},
        )

    split = peel(c)
    i, j = split.edge
    delta2 = split.delta2
    roots2, terms2 = _certify(
        restrict(f, delta2), tuple(labels[v - 1] for v in delta2.vertex_map), tol, scale
    )
    k = 2 * (c.e - 1)
    if len(roots2) > k:
        raise CertificationError(
            f"recursive certificate has {len(roots2)} squares, expected at most {k}",
            edge=_label(split.edge, labels),
            cause=MathematicalFailure("square budget exceeded"),
        )
    roots2 = roots2 + [zero(delta2.complex)] * (k - len(roots2))

    def boundary(v: int) -> list[float]:
        if not delta2.contains(v):
            return [0.0] * k
        local = delta2.to_local(v)
        return [float(r.vertex_value(local)) for r in roots2]

    if split.left_shared and split.right_shared:
        match = MatchMode.BOTH_ENDS
    elif split.right_shared:
        match = MatchMode.RIGHT_END_ONLY
    else:
        match = MatchMode.LEFT_END_ONLY

    p = f.on(split.edge)
    logger.debug(
        "peel edge %s: k=%d match=%s deg=%s",
        edge_key(_label(split.edge, labels)),
        k,
        match,
        p.degree,
    )
    try:
        adapted = adapt_sos(p, boundary(i), boundary(j), match, tol, scale=scale)
    except MathematicalFailure as err:
        raise _wrap(err, split.edge, labels) from err

    delta1 = split.delta1
    atol = tol.interp * (1 + max(p.norm(), scale))
    s_roots = []
    for s, root2 in zip(adapted.squares[:k], roots2):
        s_roots.append(glue(c, [(delta1, _on_edge(delta1.complex, s)), (delta2, root2)], tol, atol))
    s_roots.extend(linear_extension(c, split.edge, s) for s in adapted.squares[k:])

    terms = {
        split.edge: [
            linear_extension(c, split.edge, adapted.remainder.u * 2.0),
            linear_extension(c, split.edge, adapted.remainder.v * 2.0),
        ]
    }
    for edge, edge_roots in terms2.items():
        terms[delta2.global_edge(edge)] = [extend_linear(r, delta2, c) for r in edge_roots]
    return s_roots, terms


def _on_edge(c: Complex1D, p: Poly) -> PiecewisePoly:
    return PiecewisePoly(c, (p,), ())


def _label(edge: Edge, labels: tuple[int, ...]) -> Edge:
    return labels[edge[0] - 1], labels[edge[1] - 1]


def _wrap(err: MathematicalFailure, edge: Edge, labels: tuple[int, ...]) -> CertificationError:
    if isinstance(err, CertificationError):
        return err
    at = _label(edge, labels)
    return CertificationError(
        f"certification failed at edge {edge_key(at)}: {err}", edge=at, cause=err
    )


def tent_certificate(
    complex_: Complex1D, weights: Sequence[float] | Mapping[int, float]
) -> Certificate:
    """Certificate of ``sum w_i T_i`` (``w_i >= 0``) from ``T_i = T_i^2 + sum_E T_i T_j``.

    ``S = sum w_i T_i^2`` and ``S_ij = w_i + w_j``. The degree of this
    certificate is 2, so it can exceed the general bound when the weights
    make ``F`` constant on a single edge.

    Raises:
        ValueError: On a negative weight or a missing vertex
    """
    if isinstance(weights, Mapping):
        w = {v: float(weights.get(v, 0.0)) for v in complex_.vertices}
    else:
        if len(weights) != complex_.m:
            raise ValueError(f"expected {complex_.m} weights, got {len(weights)}")
        w = {v: float(x) for v, x in zip(complex_.vertices, weights)}
    negative = [v for v, x in w.items() if x < 0]
    if negative:
        raise ValueError(f"weight of T{negative[0]} is negative")

    s_roots = tuple(tent(complex_, v) * math.sqrt(w[v]) for v in complex_.vertices if w[v] > 0)
    terms = {
        (i, j): (constant(complex_, math.sqrt(w[i] + w[j])),)
        for i, j in complex_.edges
        if w[i] + w[j] > 0
    }
    cert = Certificate(complex_, s_roots, terms)
    f = zero(complex_)
    for v in complex_.vertices:
        f = f + tent(complex_, v) * w[v]
    cert.meta.input_degree = f.degree
    cert.meta.certificate_degree = cert.degree
    cert.meta.square_count = len(s_roots)
    return cert

