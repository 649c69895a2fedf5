"""Tests for piecewise polynomials and the tent representation."""

from fractions import Fraction

import numpy as np
import pytest

from tentpole.errors import ComplexMismatch, GlueMismatch, IncompatibleVertexValues
from tentpole.poly import Poly, sup_distance
from tentpole.pwpoly import (
    TentPoly,
    constant,
    eval_at,
    extend_linear,
    from_tent,
    glue,
    linear_extension,
    make,
    monomial,
    restrict,
    sum_of_squares,
    tent,
    to_tent,
    zero,
)
from tentpole.simplicial import components, sub_complex, validate
from tests.conftest import random_complex, random_compatible


def max_distance(f, g) -> float:
    return (f - g).norm()


class TestMake:
    """Tests for checked construction."""

    def test_compatible(self, path3):
        f = make(path3, [Poly.of([1.0, 1.0]), Poly.of([3.5, 1.5])])
        assert f.vertex_values() == {1: 0.0, 2: 2.0, 3: 5.0}

    def test_incompatible(self, path3):
        with pytest.raises(IncompatibleVertexValues) as exc_info:
            make(path3, [Poly.of([1.0, 1.0]), Poly.of([0.0, 1.0])])
        assert exc_info.value.vertex == 2

    def test_mapping_input(self, star):
        polys = {edge: Poly.of([1.0]) for edge in star.edges}
        f = make(star, polys, {5: 3.0})
        assert f.vertex_value(5) == 3.0

    def test_missing_edge(self, path3):
        with pytest.raises(ValueError):
            make(path3, {(1, 2): Poly.of([1.0])})

    def test_wrong_count(self, star):
        with pytest.raises(ValueError):
            make(star, [Poly.of([1.0])] * 3)

    def test_vertex_out_of_range(self, path3):
        f = constant(path3, 1.0)
        with pytest.raises(ValueError):
            f.vertex_value(4)


class TestAlgebra:
    """Tests for ring operations on C^0."""

    def test_sum_and_product(self, path3):
        f = tent(path3, 2)
        g = f * f + f
        assert g.on((1, 2))(1.0) == pytest.approx(2.0)
        assert g.on((2, 3))(1.0) == pytest.approx(0.0)

    def test_scalar_product(self, star):
        f = constant(star, 2.0) * 3.0
        assert f.vertex_value(5) == 6.0

    def test_mismatched_complexes(self, path3, triangle):
        with pytest.raises(ComplexMismatch):
            zero(path3) + zero(triangle)

    def test_degree(self, star):
        assert zero(star).degree == float("-inf")
        assert constant(star, 1.0).degree == 0
        assert (tent(star, 1) * tent(star, 2)).degree == 2

    def test_sum_of_squares(self, path3):
        total = sum_of_squares([tent(path3, 2), constant(path3, 1.0)], path3)
        assert total.vertex_values() == {1: 1.0, 2: 2.0, 3: 1.0}
        assert sum_of_squares([], path3).is_zero

    def test_isolated_only_degree(self):
        c = validate(2, [])
        f = make(c, [], [1.0, 0.0])
        assert f.degree == 0

    def test_eval_at(self, path3):
        f = tent(path3, 2)
        assert eval_at(f, 2) == 1.0
        assert eval_at(f, (2, 3), 0.0) == pytest.approx(0.5)
        with pytest.raises(ValueError):
            eval_at(f, (2, 3))


class TestTents:
    """Tests for the tent functions and the relations among them."""

    def test_package_exports_the_tent_function(self):
        import tentpole.pwpoly

        assert callable(tentpole.pwpoly.tent)
        assert tentpole.pwpoly.tent is tent

    def test_partition_of_unity(self, star):
        total = tent(star, 1, exact=True)
        for k in star.vertices[1:]:
            total = total + tent(star, k, exact=True)
        assert all(list(p.coeffs) == [Fraction(1)] for p in total.edge_polys)
        assert total.isolated_values == (Fraction(1),)

    def test_tent_is_one_at_its_vertex(self, triangle):
        for k in triangle.vertices:
            f = tent(triangle, k)
            assert f.vertex_values() == {v: float(v == k) for v in triangle.vertices}

    def test_product_of_non_neighbours_vanishes(self, path3):
        assert (tent(path3, 1) * tent(path3, 3)).is_zero

    def test_from_tent_annihilates_unity_relation(self, star):
        items = [((), 1)] + [(monomial({v: 1}), -1) for v in star.vertices]
        f = from_tent(star, TentPoly.of(items))
        assert f.is_exact
        assert f.is_zero

    def test_from_tent_annihilates_off_complex_monomials(self, path3):
        g = TentPoly.of([(monomial({1: 1, 3: 1}), 5), (monomial({1: 2, 3: 1}), -2)])
        assert from_tent(path3, g).is_zero

    def test_from_tent_out_of_range(self, path3):
        with pytest.raises(ValueError):
            from_tent(path3, TentPoly.of([(monomial({4: 1}), 1)]))

    def test_tent_of_tent(self, triangle):
        for k in triangle.vertices:
            g = to_tent(tent(triangle, k, exact=True))
            assert g.terms == {monomial({k: 1}): 1}


class TestTentConversion:
    """Tests for edge form <-> tent form."""

    def test_triangle_to_tent(self, triangle_f):
        g = to_tent(triangle_f)
        assert g.terms == {
            (): 1,
            monomial({1: 1, 2: 1}): -4,
            monomial({1: 1, 3: 1}): -4,
            monomial({2: 1, 3: 1}): -4,
        }
        assert str(g) == "1 - 4*T1*T2 - 4*T1*T3 - 4*T2*T3"

    def test_triangle_from_tent(self, triangle):
        g = TentPoly.of(
            [
                ((), 1),
                (monomial({1: 1, 2: 1}), -4),
                (monomial({1: 1, 3: 1}), -4),
                (monomial({2: 1, 3: 1}), -4),
            ]
        )
        f = from_tent(triangle, g)
        assert f.is_exact
        for p in f.edge_polys:
            assert list(p.coeffs) == [0, 0, 1]

    def test_degree_bound(self, triangle_f):
        assert triangle_f.degree <= to_tent(triangle_f).degree

    def test_round_trip_random(self):
        rng = np.random.default_rng(8)
        for _ in range(100):
            c = random_complex(rng)
            f = random_compatible(c, int(rng.integers(0, 7)), rng)
            back = from_tent(c, to_tent(f))
            assert max_distance(back, f) <= 1e-9 * (1 + f.norm())

    def test_round_trip_exact(self, triangle_f):
        back = from_tent(triangle_f.complex, to_tent(triangle_f))
        assert (back - triangle_f).is_zero

    def test_monomial_shapes(self):
        rng = np.random.default_rng(21)
        c = validate(4, [[1, 2], [2, 3], [3, 4]])
        g = to_tent(random_compatible(c, 5, rng))
        for mono in g.terms:
            variables = [v for v, _ in mono]
            assert len(variables) <= 2
            if len(variables) == 2:
                assert c.has_edge(tuple(variables))


class TestRestrictGlueExtend:
    """Tests for moving functions between a complex and its pieces."""

    def test_restrict_to_component(self, star):
        f = constant(star, 2.0) + tent(star, 5)
        parts = components(star)
        g = restrict(f, parts[1])
        assert g.isolated_values == (3.0,)

    def test_glue_agreeing_pieces(self, path3):
        left, right = sub_complex([(1, 2)]), sub_complex([(2, 3)])
        f = tent(path3, 2)
        glued = glue(path3, [(left, restrict(f, left)), (right, restrict(f, right))])
        assert max_distance(glued, f) == 0

    def test_glue_mismatch(self, path3):
        left, right = sub_complex([(1, 2)]), sub_complex([(2, 3)])
        a = constant(left.complex, 1.0)
        b = constant(right.complex, 2.0)
        with pytest.raises(GlueMismatch) as exc_info:
            glue(path3, [(left, a), (right, b)])
        assert exc_info.value.vertex == 2

    def test_glue_uncovered(self, path3):
        left = sub_complex([(1, 2)])
        with pytest.raises(ValueError):
            glue(path3, [(left, constant(left.complex, 1.0))])

    def test_extend_linear(self, triangle):
        sub = sub_complex([(1, 2)])
        g = make(sub.complex, [Poly.of([1.0, 0.0, -1.0])])
        f = extend_linear(g, sub, triangle)
        assert f.on((1, 2)) is g.edge_polys[0]
        assert f.on((1, 3)).is_zero
        assert f.on((2, 3)).is_zero

    def test_extend_carries_vertex_values(self, path3):
        sub = sub_complex([(1, 2)])
        g = make(sub.complex, [Poly.of([2.0, 1.0])])
        f = extend_linear(g, sub, path3)
        assert f.vertex_values() == {1: 1.0, 2: 3.0, 3: 0.0}
        assert sup_distance(f.on((2, 3)), Poly.of([1.5, -1.5])) == 0

    def test_linear_extension(self, star):
        f = linear_extension(star, (1, 3), Poly.of([1.0, 1.0, 1.0]))
        assert f.vertex_value(1) == pytest.approx(1.0)
        assert f.vertex_value(3) == pytest.approx(3.0)
        assert f.vertex_value(5) == 0.0
        assert f.on((1, 2))(1.0) == pytest.approx(0.0)

    def test_linear_extension_needs_edge(self, path3):
        with pytest.raises(ValueError):
            linear_extension(path3, (1, 3), Poly.of([1.0]))
