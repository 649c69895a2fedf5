"""Edge peeling for the induction on the number of edges."""

from dataclasses import dataclass
from enum import StrEnum

from tentpole.simplicial.complex import Complex1D, Edge, SubComplex, sub_complex


class SharedVertices(StrEnum):
    ONE_VERTEX = "one_vertex"
    TWO_VERTICES = "two_vertices"


@dataclass(frozen=True)
class PeelResult:
    """A split of a connected complex into one edge and the rest.

    ``delta1`` is the peeled edge alone, ``delta2`` the closure of the other
    edges (possibly disconnected). ``shared_vertices`` lists the global labels
    of ``delta1`` that also lie in ``delta2``.
    """

    edge: Edge
    delta1: SubComplex
    delta2: SubComplex
    shared: SharedVertices
    shared_vertices: tuple[int, ...]

    @property
    def left_shared(self) -> bool:
        return self.edge[0] in self.shared_vertices

    @property
    def right_shared(self) -> bool:
        return self.edge[1] in self.shared_vertices


def peel(c: Complex1D) -> PeelResult:
    """Split off the lexicographically smallest edge.

    Raises:
        ValueError: If ``c`` is disconnected or has fewer than two edges
    """
    if c.e < 2:
        raise ValueError(f"peel needs at least two edges, got {c.e}")
    if not c.is_connected:
        raise ValueError("peel needs a connected complex")

    edge = c.edges[0]
    rest = c.edges[1:]
    delta2 = sub_complex(rest)
    shared = tuple(v for v in edge if delta2.contains(v))
    return PeelResult(
        edge=edge,
        delta1=sub_complex([edge]),
        delta2=delta2,
        shared=SharedVertices.TWO_VERTICES if len(shared) == 2 else SharedVertices.ONE_VERTEX,
        shared_vertices=shared,
    )
