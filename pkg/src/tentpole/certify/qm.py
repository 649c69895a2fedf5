"""Rewriting certificates in the quadratic module generated by the tents."""

from dataclasses import dataclass

from tentpole.certify.model import Certificate
from tentpole.pwpoly import PiecewisePoly, sum_of_squares, tent
from tentpole.simplicial import Complex1D


@dataclass(frozen=True)
class QmTerm:
    """``generator * sum(r^2 for r in roots)``; a ``None`` generator stands for 1."""

    generator: int | None
    roots: tuple[PiecewisePoly, ...]

    @property
    def label(self) -> str:
        return "1" if self.generator is None else f"T{self.generator}"


def qm_convert(cert: Certificate) -> list[QmTerm]:
    """Express a certificate in ``QM(T_1, ..., T_m)``.

    Uses ``T_i T_j = T_i^2 T_j + T_j^2 T_i``, which holds on the whole
    complex: on the edge ``T_i + T_j = 1`` and elsewhere ``T_i T_j = 0``.
    The multiplier of ``T_i`` is ``sum_j S_ij T_j^2``, with square roots
    ``r * T_j`` for every root ``r`` of ``S_ij``.
    """
    c = cert.complex
    exact = cert.is_exact
    by_generator: dict[int, list[PiecewisePoly]] = {}
    for (i, j), roots in sorted(cert.edge_terms.items()):
        if not c.has_edge((i, j)):
            continue
        for r in roots:
            by_generator.setdefault(i, []).append(r * tent(c, j, exact))
            by_generator.setdefault(j, []).append(r * tent(c, i, exact))

    terms = [QmTerm(None, tuple(cert.s_roots))]
    terms.extend(QmTerm(v, tuple(by_generator[v])) for v in sorted(by_generator))
    return terms


def expand_qm(complex_: Complex1D, terms: list[QmTerm]) -> PiecewisePoly:
    """``sum generator * (sum of squares)`` over the converted terms."""
    total = sum_of_squares((), complex_)
    for term in terms:
        sos = sum_of_squares(term.roots, complex_)
        if term.generator is not None:
            exact = all(r.is_exact for r in term.roots)
            sos = sos * tent(complex_, term.generator, exact)
        total = sos if total.is_zero else total + sos
    return total
