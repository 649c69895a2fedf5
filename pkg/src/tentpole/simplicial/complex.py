"""One-dimensional simplicial complexes."""

from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import cached_property

from tentpole.errors import MalformedComplex

# Edges are pairs of 1-based vertex labels (i, j) with i < j.
Edge = tuple[int, int]


def edge_key(edge: Edge) -> str:
    """The ``"i-j"`` key used in documents."""
    return f"{edge[0]}-{edge[1]}"


def parse_edge_key(key: str) -> Edge:
    i, _, j = key.partition("-")
    return int(i), int(j)


@dataclass(frozen=True)
class Complex1D:
    """A 1-dimensional simplicial complex on vertices ``1..m``.

    Edges are kept sorted lexicographically; the orientation of an edge
    ``(i, j)`` always runs from ``v_i`` (parameter -1) to ``v_j`` (+1).
    Construct through ``validate`` to check raw input.
    """

    m: int
    edges: tuple[Edge, ...] = field(default=())

    @cached_property
    def isolated(self) -> tuple[int, ...]:
        touched = {v for edge in self.edges for v in edge}
        return tuple(v for v in self.vertices if v not in touched)

    @property
    def vertices(self) -> range:
        return range(1, self.m + 1)

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def m0(self) -> int:
        return len(self.isolated)

    @cached_property
    def _edge_index(self) -> dict[Edge, int]:
        return {edge: k for k, edge in enumerate(self.edges)}

    def index(self, edge: Edge) -> int:
        """Position of ``edge`` in ``edges``; ``KeyError`` if absent."""
        return self._edge_index[edge]

    def has_edge(self, edge: Edge) -> bool:
        return edge in self._edge_index

    def incident(self, v: int) -> tuple[Edge, ...]:
        return tuple(edge for edge in self.edges if v in edge)

    def neighbours(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(j if i == v else i for i, j in self.incident(v)))

    @property
    def is_connected(self) -> bool:
        return len(components(self)) <= 1

    def to_dict(self) -> dict:
        return {"m": self.m, "edges": [list(edge) for edge in self.edges]}


def validate(m: int, edges: Iterable[Iterable[int]]) -> Complex1D:
    """Build a canonical complex from a vertex count and raw edge list.

    Raises:
        MalformedComplex: On a nonpositive vertex count, self-loops,
            out-of-range indices or duplicate edges; every problem is listed
            in ``errors``
    """
    errors: list[str] = []
    if not isinstance(m, int) or m < 1:
        raise MalformedComplex(f"vertex count must be a positive integer, got {m!r}")

    seen: set[Edge] = set()
    for raw in edges:
        pair = tuple(raw)
        if len(pair) != 2:
            errors.append(f"edge {list(pair)} does not have two endpoints")
            continue
        i, j = int(pair[0]), int(pair[1])
        if i == j:
            errors.append(f"self-loop at vertex {i}")
            continue
        if not (1 <= i <= m and 1 <= j <= m):
            errors.append(f"edge ({i},{j}) out of range 1..{m}")
            continue
        edge = (min(i, j), max(i, j))
        if edge in seen:
            errors.append(f"duplicate edge {edge_key(edge)}")
            continue
        seen.add(edge)

    if errors:
        raise MalformedComplex(f"malformed complex: {errors[0]}", errors=errors)
    return Complex1D(m, tuple(sorted(seen)))


@dataclass(frozen=True)
class SubComplex:
    """A complex with its vertices relabelled into a larger one.

    ``vertex_map[k - 1]`` is the global label of local vertex ``k``. Local
    labels follow the global order, so edge orientations agree.
    """

    complex: Complex1D
    vertex_map: tuple[int, ...]

    @cached_property
    def _local(self) -> dict[int, int]:
        return {g: k + 1 for k, g in enumerate(self.vertex_map)}

    def to_global(self, v: int) -> int:
        return self.vertex_map[v - 1]

    def to_local(self, v: int) -> int:
        return self._local[v]

    def contains(self, v: int) -> bool:
        return v in self._local

    def global_edge(self, edge: Edge) -> Edge:
        return self.to_global(edge[0]), self.to_global(edge[1])

    def local_edge(self, edge: Edge) -> Edge:
        return self.to_local(edge[0]), self.to_local(edge[1])

    @property
    def global_edges(self) -> tuple[Edge, ...]:
        return tuple(self.global_edge(edge) for edge in self.complex.edges)


def sub_complex(edges: Iterable[Edge], extra_vertices: Iterable[int] = ()) -> SubComplex:
    """The sub-complex spanned by ``edges`` plus ``extra_vertices``."""
    edges = list(edges)
    vertex_map = tuple(sorted({v for edge in edges for v in edge} | set(extra_vertices)))
    local = {g: k + 1 for k, g in enumerate(vertex_map)}
    complex_ = Complex1D(
        len(vertex_map), tuple(sorted((local[i], local[j]) for i, j in edges))
    )
    return SubComplex(complex_, vertex_map)


def components(c: Complex1D) -> list[SubComplex]:
    """Connected components, ordered by their smallest vertex."""
    parent = list(range(c.m + 1))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in c.edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    groups: dict[int, list[int]] = {}
    for v in c.vertices:
        groups.setdefault(find(v), []).append(v)

    result = []
    for root in sorted(groups):
        members = set(groups[root])
        edges = [edge for edge in c.edges if edge[0] in members]
        result.append(sub_complex(edges, members))
    return result
