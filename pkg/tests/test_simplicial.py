"""Tests for complexes, components and edge peeling."""

import pytest

from tentpole.errors import MalformedComplex
from tentpole.simplicial import (
    Complex1D,
    SharedVertices,
    components,
    edge_key,
    parse_edge_key,
    peel,
    sub_complex,
    validate,
)


class TestValidate:
    """Tests for building complexes from raw input."""

    def test_reversed_pairs_normalised(self):
        c = validate(3, [[3, 1], [2, 1]])
        assert c.edges == ((1, 2), (1, 3))

    def test_counts(self, star):
        assert (star.m, star.e, star.m0) == (5, 3, 1)
        assert star.isolated == (5,)

    def test_self_loop(self):
        with pytest.raises(MalformedComplex, match="self-loop"):
            validate(2, [[1, 1]])

    def test_out_of_range(self):
        with pytest.raises(MalformedComplex):
            validate(2, [[1, 3]])

    def test_duplicate_lists_every_error(self):
        with pytest.raises(MalformedComplex) as exc_info:
            validate(3, [[1, 2], [2, 1], [3, 3]])
        assert len(exc_info.value.errors) == 2
        assert "duplicate edge 1-2" in exc_info.value.errors[0]

    def test_nonpositive_vertex_count(self):
        with pytest.raises(MalformedComplex):
            validate(0, [])

    def test_edge_keys(self):
        assert edge_key((2, 7)) == "2-7"
        assert parse_edge_key("2-7") == (2, 7)


class TestComplex1D:
    """Tests for incidence queries."""

    def test_incident_and_neighbours(self, star):
        assert star.incident(1) == ((1, 2), (1, 3), (1, 4))
        assert star.neighbours(1) == (2, 3, 4)
        assert star.neighbours(5) == ()

    def test_index(self, triangle):
        assert triangle.index((2, 3)) == 2
        assert triangle.has_edge((1, 3))
        assert not triangle.has_edge((3, 1))

    def test_connected(self, triangle, star):
        assert triangle.is_connected
        assert not star.is_connected

    def test_to_dict(self, path3):
        assert path3.to_dict() == {"m": 3, "edges": [[1, 2], [2, 3]]}

    def test_equality(self):
        assert validate(2, [[2, 1]]) == Complex1D(2, ((1, 2),))


class TestComponents:
    """Tests for connected components and sub-complexes."""

    def test_star_with_isolated_vertex(self, star):
        parts = components(star)
        assert [p.vertex_map for p in parts] == [(1, 2, 3, 4), (5,)]
        assert parts[1].complex.e == 0
        assert parts[1].complex.m0 == 1

    def test_ordered_by_smallest_vertex(self):
        c = validate(5, [[4, 5], [1, 3]])
        parts = components(c)
        assert [p.vertex_map for p in parts] == [(1, 3), (2,), (4, 5)]
        assert parts[0].complex.edges == ((1, 2),)

    def test_sub_complex_relabels(self):
        sub = sub_complex([(2, 5), (5, 7)])
        assert sub.vertex_map == (2, 5, 7)
        assert sub.complex.edges == ((1, 2), (2, 3))
        assert sub.to_global(3) == 7
        assert sub.to_local(5) == 2
        assert sub.global_edges == ((2, 5), (5, 7))
        assert not sub.contains(1)

    def test_extra_vertices(self):
        sub = sub_complex([(1, 2)], extra_vertices=[4])
        assert sub.complex.isolated == (3,)


class TestPeel:
    """Tests for splitting off an edge."""

    def test_triangle_shares_both_ends(self, triangle):
        split = peel(triangle)
        assert split.edge == (1, 2)
        assert split.shared is SharedVertices.TWO_VERTICES
        assert split.left_shared and split.right_shared
        assert split.delta2.global_edges == ((1, 3), (2, 3))

    def test_path_shares_one_end(self, path3):
        split = peel(path3)
        assert split.edge == (1, 2)
        assert split.shared is SharedVertices.ONE_VERTEX
        assert split.shared_vertices == (2,)
        assert split.right_shared and not split.left_shared

    def test_left_end_shared(self):
        split = peel(validate(3, [[1, 3], [1, 2]]))
        assert split.edge == (1, 2)
        assert split.left_shared is True
        assert split.right_shared is False

    def test_rest_may_disconnect(self):
        c = validate(4, [[1, 2], [1, 3], [2, 4]])
        split = peel(c)
        assert split.edge == (1, 2)
        assert len(components(split.delta2.complex)) == 2

    def test_needs_two_edges(self):
        with pytest.raises(ValueError):
            peel(validate(2, [[1, 2]]))

    def test_needs_connected(self):
        with pytest.raises(ValueError):
            peel(validate(4, [[1, 2], [3, 4]]))
