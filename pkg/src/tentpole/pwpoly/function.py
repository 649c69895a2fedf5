"""Continuous piecewise polynomials in edge-tuple form."""

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from tentpole.errors import ComplexMismatch, GlueMismatch, IncompatibleVertexValues
from tentpole.poly import NEG_INF_DEGREE, Poly
from tentpole.poly.core import Scalar
from tentpole.settings import ToleranceSettings, resolve_tolerances
from tentpole.simplicial import Complex1D, Edge, SubComplex, sub_complex

logger = logging.getLogger(__name__)


def endpoint(edge: Edge, v: int) -> int:
    """Parameter value (-1 or 1) of vertex ``v`` on ``edge``."""
    if v == edge[0]:
        return -1
    if v == edge[1]:
        return 1
    raise ValueError(f"vertex {v} is not on edge {edge}")


def _at(p: Poly, x: int) -> Scalar:
    if p.is_exact:
        return p(Fraction(x))
    return float(p(float(x))) if not p.is_zero else 0.0


@dataclass(frozen=True, eq=False)
class PiecewisePoly:
    """An element of C^0 of a 1-dimensional complex.

    ``edge_polys[k]`` lives on ``complex.edges[k]`` in the parameter
    ``t in [-1, 1]``; ``isolated_values[k]`` is the value at
    ``complex.isolated[k]``. Build through ``make`` to check continuity.
    """

    complex: Complex1D
    edge_polys: tuple[Poly, ...]
    isolated_values: tuple[Scalar, ...]

    # -- access ---------------------------------------------------------

    def on(self, edge: Edge) -> Poly:
        return self.edge_polys[self.complex.index(edge)]

    def vertex_value(self, v: int) -> Scalar:
        """``F(v)``, read from the first incident edge or the isolated value."""
        if not 1 <= v <= self.complex.m:
            raise ValueError(f"vertex {v} out of range 1..{self.complex.m}")
        for edge in self.complex.incident(v):
            return _at(self.on(edge), endpoint(edge, v))
        return self.isolated_values[self.complex.isolated.index(v)]

    def vertex_values(self) -> dict[int, Scalar]:
        return {v: self.vertex_value(v) for v in self.complex.vertices}

    @property
    def degree(self) -> float:
        return degree(self)

    @property
    def is_exact(self) -> bool:
        return all(p.is_exact or p.is_zero for p in self.edge_polys) and all(
            isinstance(x, Fraction | int) for x in self.isolated_values
        )

    @property
    def is_zero(self) -> bool:
        return all(p.is_zero for p in self.edge_polys) and all(x == 0 for x in self.isolated_values)

    def norm(self) -> float:
        """Largest coefficient or isolated value in absolute value."""
        values = [p.norm() for p in self.edge_polys]
        values.extend(abs(float(x)) for x in self.isolated_values)
        return max(values, default=0.0)

    def to_exact(self) -> "PiecewisePoly":
        return PiecewisePoly(
            self.complex,
            tuple(p.to_exact() for p in self.edge_polys),
            tuple(Fraction(x) for x in self.isolated_values),
        )

    def to_float(self) -> "PiecewisePoly":
        return PiecewisePoly(
            self.complex,
            tuple(p.to_float() for p in self.edge_polys),
            tuple(float(x) for x in self.isolated_values),
        )

    # -- ring operations ------------------------------------------------

    def _zip(self, other: "PiecewisePoly", op: Any) -> "PiecewisePoly":
        if other.complex != self.complex:
            raise ComplexMismatch("operands live on different complexes")
        return PiecewisePoly(
            self.complex,
            tuple(op(p, q) for p, q in zip(self.edge_polys, other.edge_polys)),
            tuple(op(x, y) for x, y in zip(self.isolated_values, other.isolated_values)),
        )

    def __add__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        return self._zip(other, lambda x, y: x + y)

    def __sub__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        return self._zip(other, lambda x, y: x - y)

    def __mul__(self, other: "PiecewisePoly | Scalar") -> "PiecewisePoly":
        if isinstance(other, PiecewisePoly):
            return self._zip(other, lambda x, y: x * y)
        return scale(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "PiecewisePoly":
        return scale(self, -1)

    def __repr__(self) -> str:
        pairs = zip(self.complex.edges, self.edge_polys)
        edges = ", ".join(f"{i}-{j}: {p!r}" for (i, j), p in pairs)
        return f"PiecewisePoly({{{edges}}}, isolated={list(self.isolated_values)!r})"


def make(
    complex_: Complex1D,
    edge_polys: Sequence[Poly] | Mapping[Edge, Poly],
    isolated_values: Sequence[Scalar] | Mapping[int, Scalar] = (),
    tol: ToleranceSettings | None = None,
) -> PiecewisePoly:
    """Build a checked ``PiecewisePoly``.

    Args:
        complex_: The complex
        edge_polys: One polynomial per edge, in edge order or keyed by edge
        isolated_values: One value per isolated vertex, in order or keyed by
            vertex
        tol: Tolerances (``compat``)

    Raises:
        ValueError: If an edge or isolated vertex has no value
        IncompatibleVertexValues: If two incident edges disagree at a vertex
            by more than ``tol.compat * (1 + max |F(v)|)``
    """
    tol = resolve_tolerances(tol)
    if isinstance(edge_polys, Mapping):
        missing = [e for e in complex_.edges if e not in edge_polys]
        if missing:
            raise ValueError(f"no polynomial for edge {missing[0]}")
        polys = tuple(edge_polys[e] for e in complex_.edges)
    else:
        polys = tuple(edge_polys)
    if isinstance(isolated_values, Mapping):
        values = tuple(isolated_values[v] for v in complex_.isolated)
    else:
        values = tuple(isolated_values)
    if len(polys) != complex_.e or len(values) != complex_.m0:
        raise ValueError(
            f"expected {complex_.e} edge polynomials and {complex_.m0} isolated values, "
            f"got {len(polys)} and {len(values)}"
        )

    f = PiecewisePoly(complex_, polys, values)
    _check_compatible(f, tol)
    return f


def _check_compatible(f: PiecewisePoly, tol: ToleranceSettings) -> None:
    seen: dict[int, list[float]] = {}
    for edge, p in zip(f.complex.edges, f.edge_polys):
        for v in edge:
            seen.setdefault(v, []).append(float(_at(p, endpoint(edge, v))))
    magnitude = max((abs(x) for values in seen.values() for x in values), default=0.0)
    atol = tol.compat * (1 + magnitude)
    for v, values in sorted(seen.items()):
        for x in values[1:]:
            if abs(x - values[0]) > atol:
                raise IncompatibleVertexValues(
                    f"edge polynomials disagree at vertex {v}: {values[0]!r} != {x!r}",
                    vertex=v,
                    values=(values[0], x),
                )


def zero(complex_: Complex1D) -> PiecewisePoly:
    polys = tuple(Poly.zero() for _ in complex_.edges)
    return PiecewisePoly(complex_, polys, tuple(0.0 for _ in complex_.isolated))


def constant(complex_: Complex1D, c: Scalar) -> PiecewisePoly:
    polys = tuple(Poly.constant(c) for _ in complex_.edges)
    return PiecewisePoly(complex_, polys, tuple(c for _ in complex_.isolated))


def tent(complex_: Complex1D, k: int, exact: bool = False) -> PiecewisePoly:
    """The Courant function ``T_k``: 1 at ``v_k``, 0 at other vertices, linear on edges.

    Raises:
        ValueError: If ``k`` is not a vertex
    """
    if not 1 <= k <= complex_.m:
        raise ValueError(f"vertex {k} out of range 1..{complex_.m}")
    half: Scalar = Fraction(1, 2) if exact else 0.5
    polys = []
    for i, j in complex_.edges:
        if j == k:
            polys.append(Poly.of([half, half]))
        elif i == k:
            polys.append(Poly.of([half, -half]))
        else:
            polys.append(Poly.zero())
    one, nil = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return PiecewisePoly(
        complex_, tuple(polys), tuple(one if v == k else nil for v in complex_.isolated)
    )


def add(f: PiecewisePoly, g: PiecewisePoly) -> PiecewisePoly:
    return f + g


def mul(f: PiecewisePoly, g: PiecewisePoly) -> PiecewisePoly:
    return f * g


def scale(f: PiecewisePoly, c: Scalar) -> PiecewisePoly:
    return PiecewisePoly(
        f.complex, tuple(p * c for p in f.edge_polys), tuple(x * c for x in f.isolated_values)
    )


def eval_at(f: PiecewisePoly, where: int | Edge, t: float | None = None) -> Scalar:
    """Evaluate at a vertex (``where`` an int) or at parameter ``t`` on an edge."""
    if isinstance(where, int):
        return f.vertex_value(where)
    if t is None:
        raise ValueError("evaluating on an edge needs a parameter t")
    return f.on(where)(t)


def degree(f: PiecewisePoly) -> float:
    """Largest edge degree; 0 for nonzero functions supported on isolated vertices."""
    deg = max((p.degree for p in f.edge_polys), default=NEG_INF_DEGREE)
    if deg == NEG_INF_DEGREE and any(x != 0 for x in f.isolated_values):
        return 0
    return deg


def sum_of_squares(parts: Iterable[PiecewisePoly], complex_: Complex1D) -> PiecewisePoly:
    total: PiecewisePoly | None = None
    for part in parts:
        total = part * part if total is None else total + part * part
    return zero(complex_) if total is None else total


# -- restriction, gluing and extension -------------------------------------


def restrict(f: PiecewisePoly, sub: SubComplex) -> PiecewisePoly:
    """The restriction of ``f`` to a sub-complex, in its local labels."""
    polys = tuple(f.on(sub.global_edge(edge)) for edge in sub.complex.edges)
    values = tuple(f.vertex_value(sub.to_global(v)) for v in sub.complex.isolated)
    return PiecewisePoly(sub.complex, polys, values)


def glue(
    complex_: Complex1D,
    parts: Sequence[tuple[SubComplex, PiecewisePoly]],
    tol: ToleranceSettings | None = None,
    atol: float | None = None,
) -> PiecewisePoly:
    """Assemble pieces defined on sub-complexes that cover ``complex_``.

    Args:
        complex_: Target complex
        parts: ``(sub, piece)`` pairs; every edge and vertex must be covered
        tol: Tolerances (``compat``)
        atol: Absolute agreement threshold at shared vertices; defaults to
            ``tol.compat * (1 + max |piece(v)|)``

    Raises:
        GlueMismatch: If two pieces disagree at a shared vertex
        ValueError: If an edge or isolated vertex is not covered
    """
    tol = resolve_tolerances(tol)
    values: dict[int, list[float]] = {}
    polys: dict[Edge, Poly] = {}
    exact: dict[int, Scalar] = {}
    for sub, piece in parts:
        for local, p in zip(sub.complex.edges, piece.edge_polys):
            polys[sub.global_edge(local)] = p
        for v in sub.complex.vertices:
            value = piece.vertex_value(v)
            exact.setdefault(sub.to_global(v), value)
            values.setdefault(sub.to_global(v), []).append(float(value))

    if atol is None:
        magnitude = max((abs(x) for xs in values.values() for x in xs), default=0.0)
        atol = tol.compat * (1 + magnitude)
    for v, xs in sorted(values.items()):
        for x in xs[1:]:
            if abs(x - xs[0]) > atol:
                raise GlueMismatch(
                    f"pieces disagree at vertex {v}: {xs[0]!r} != {x!r}",
                    vertex=v,
                    values=(xs[0], x),
                )

    missing = [edge for edge in complex_.edges if edge not in polys]
    missing += [v for v in complex_.isolated if v not in exact]
    if missing:
        raise ValueError(f"glue leaves {missing[0]} uncovered")
    return PiecewisePoly(
        complex_,
        tuple(polys[edge] for edge in complex_.edges),
        tuple(exact[v] for v in complex_.isolated),
    )


def extend_linear(f: PiecewisePoly, sub: SubComplex, complex_: Complex1D) -> PiecewisePoly:
    """Extend a function on a sub-complex to ``complex_``.

    Edges outside ``sub`` get the linear interpolant of the vertex values,
    with 0 at vertices outside ``sub``; vertices outside ``sub`` take 0.
    Embedding a union of components is the special case where no outside
    edge touches ``sub``.
    """
    inside = {sub.global_edge(edge): p for edge, p in zip(sub.complex.edges, f.edge_polys)}
    exact = f.is_exact and not f.is_zero

    def value(v: int) -> Scalar:
        if sub.contains(v):
            return f.vertex_value(sub.to_local(v))
        return Fraction(0) if exact else 0.0

    polys = []
    for i, j in complex_.edges:
        if (i, j) in inside:
            polys.append(inside[(i, j)])
        else:
            polys.append(Poly.linear_interpolant(value(i), value(j)))
    return PiecewisePoly(complex_, tuple(polys), tuple(value(v) for v in complex_.isolated))


def linear_extension(complex_: Complex1D, edge: Edge, g: Poly) -> PiecewisePoly:
    """Extend ``g`` on ``edge`` by degree-one pieces decaying away from it.

    Raises:
        ValueError: If ``edge`` is not an edge of ``complex_``
    """
    if not complex_.has_edge(edge):
        raise ValueError(f"{edge} is not an edge of the complex")
    sub = sub_complex([edge])
    return extend_linear(PiecewisePoly(sub.complex, (g,), ()), sub, complex_)
