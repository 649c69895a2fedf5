"""Tests for nonnegativity decisions, certificate construction and verification."""

from fractions import Fraction

import numpy as np
import pytest

from tentpole.certify import (
    Certificate,
    Verdict,
    certify,
    expand,
    expand_qm,
    is_nonneg,
    qm_convert,
    random_nonneg,
    tent_certificate,
    verify,
)
from tentpole.errors import ComplexMismatch, NotNonnegative
from tentpole.formats import load_certificate, load_function
from tentpole.poly import Poly
from tentpole.pwpoly import PiecewisePoly, constant, make, tent
from tentpole.settings import ToleranceSettings
from tentpole.simplicial import validate
from tests.conftest import random_complex

TOL = ToleranceSettings()


def vertex_identity_gap(f: PiecewisePoly, cert) -> float:
    """``max_v |F(v) - sum s(v)^2|``; the ``T_i T_j`` terms vanish at vertices."""
    gaps = []
    for v in f.complex.vertices:
        total = sum(float(r.vertex_value(v)) ** 2 for r in cert.s_roots)
        gaps.append(abs(float(f.vertex_value(v)) - total))
    return max(gaps)


def assert_valid(f: PiecewisePoly, cert) -> None:
    report = verify(f, cert, TOL)
    assert report.passed, report.to_dict()
    c = f.complex
    assert len(cert.s_roots) <= 2 * c.e + c.m0
    assert all(len(roots) <= 2 for roots in cert.edge_terms.values())
    assert vertex_identity_gap(f, cert) <= 1e-7 * (1 + f.norm())


class TestIsNonneg:
    """Tests for the nonnegativity decision."""

    def test_triangle(self, triangle_f):
        report = is_nonneg(triangle_f)
        assert report.ok
        assert report.minimum == pytest.approx(0.0, abs=1e-12)

    def test_negative_example(self):
        c = validate(2, [[1, 2]])
        f = make(c, [Poly.of([-0.25, 0.0, 1.0])])
        report = is_nonneg(f)
        assert report.verdict is Verdict.NEGATIVE
        assert report.witness.edge == (1, 2)
        assert report.witness.t == pytest.approx(0.0, abs=1e-9)
        assert report.minimum == pytest.approx(-0.25)
        with pytest.raises(NotNonnegative):
            report.raise_if_negative()

    def test_negative_isolated_vertex(self, star):
        f = constant(star, 1.0) - tent(star, 5) * 2.0
        report = is_nonneg(f)
        assert report.verdict is Verdict.NEGATIVE
        assert report.witness.vertex == 5
        assert report.to_dict()["witness"] == {"value": -1.0, "vertex": 5}

    def test_marginal(self, path3):
        f = constant(path3, -1e-12)
        assert is_nonneg(f).verdict is Verdict.MARGINAL

    def test_perturbed_instances_are_negative(self):
        rng = np.random.default_rng(5)
        for seed in range(50):
            c = random_complex(rng)
            f = random_nonneg(c, 4, seed)
            i, j = c.edges[int(rng.integers(0, c.e))]
            eps = 4 * (float(np.abs(f.on((i, j)).coeffs).sum()) + 1)
            g = f - tent(c, i) * tent(c, j) * eps
            report = is_nonneg(g)
            assert report.verdict is Verdict.NEGATIVE
            with pytest.raises(NotNonnegative):
                certify(g)


class TestCertify:
    """Tests for certificate construction."""

    def test_triangle(self, triangle_f):
        cert = certify(triangle_f, TOL)
        assert_valid(triangle_f, cert)
        assert cert.meta.residual <= 1e-6
        assert cert.degree <= 15
        assert cert.meta.input_degree == 2
        assert cert.meta.square_count == len(cert.s_roots)

    def test_single_edge(self):
        c = validate(2, [[1, 2]])
        f = make(c, [Poly.of([1.0, 1.0])])
        cert = certify(f, TOL)
        assert_valid(f, cert)
        assert set(cert.edge_terms) <= {(1, 2)}

    def test_tent_function(self, path3):
        f = tent(path3, 1)
        assert_valid(f, certify(f, TOL))

    def test_isolated_vertices(self, star):
        f = random_nonneg(star, 4, seed=3)
        cert = certify(f, TOL)
        assert_valid(f, cert)

    def test_disconnected(self):
        c = validate(5, [[1, 2], [2, 3], [4, 5]])
        f = random_nonneg(c, 4, seed=17)
        assert_valid(f, certify(f, TOL))

    def test_square_budget_per_component(self):
        c = validate(7, [[1, 2], [2, 3], [1, 3], [4, 5]])
        f = random_nonneg(c, 4, seed=21)
        cert = certify(f, TOL)
        assert len(cert.s_roots) == 2 * 3 + 2 * 1 + 2
        assert_valid(f, cert)

    def test_zero_function(self, triangle):
        f = constant(triangle, 0.0)
        cert = certify(f, TOL)
        assert verify(f, cert, TOL).passed

    def test_negative_input_rejected(self, path3):
        f = constant(path3, 1.0) - tent(path3, 2) * 3.0
        with pytest.raises(NotNonnegative) as exc_info:
            certify(f)
        assert exc_info.value.value == pytest.approx(-2.0)

    @pytest.mark.parametrize("seed", range(100))
    def test_random_suite(self, seed):
        rng = np.random.default_rng(1000 + seed)
        c = random_complex(rng)
        f = random_nonneg(c, int(rng.integers(0, 9)), seed)
        cert = certify(f, TOL)
        assert_valid(f, cert)
        assert len(cert.s_roots) == 2 * c.e + c.m0
        qm = expand_qm(c, qm_convert(cert))
        assert (qm - expand(cert)).norm() <= 1e-7 * (1 + f.norm())


class TestVerify:
    """Tests for certificate checking."""

    def test_worked_certificate_exact(self, fixtures_dir):
        f = load_function(fixtures_dir / "triangle.json").value
        loaded = load_certificate(fixtures_dir / "triangle_cert.json", complex_=f.complex)
        assert loaded.exact
        report = verify(f, loaded.value, TOL)
        assert report.exact
        assert report.residual == 0
        assert report.passed
        assert report.per_component[0].certificate_degree == 4
        assert report.per_component[0].degree_bound == 15

    def test_worked_certificate_root_shape(self, fixtures_dir):
        f = load_function(fixtures_dir / "triangle.json").value
        cert = load_certificate(fixtures_dir / "triangle_cert.json", complex_=f.complex).value
        root = cert.s_roots[0]
        assert list(root.on((1, 2)).coeffs) == [0, 0, -1]
        assert list(root.on((1, 3)).coeffs) == [0, 1]
        assert list(cert.edge_terms[(1, 2)][0].on((1, 2)).coeffs) == [0, -2]

    def test_wrong_certificate(self, triangle_f):
        cert = certify(triangle_f, TOL)
        f = triangle_f.to_float() + constant(triangle_f.complex, 1.0)
        report = verify(f, cert, TOL)
        assert not report.residual_ok
        assert not report.passed

    def test_corrupted_coefficient(self):
        c = validate(2, [[1, 2]])
        one = make(c, [Poly.of([Fraction(1)])])
        t = make(c, [Poly.of([Fraction(0), Fraction(1)])])
        cert = Certificate(c, (one, t), {})
        f = make(c, [Poly.of([Fraction(1), Fraction(0), Fraction(1)])])
        assert verify(f, cert, TOL).residual == 0

        corrupted = make(c, [Poly.of([Fraction(1), Fraction(1, 1000), Fraction(1)])])
        report = verify(corrupted, cert, TOL)
        assert report.exact
        assert report.residual >= 1e-4
        assert not report.passed

    def test_float_path(self, triangle_f):
        cert = certify(triangle_f, TOL)
        report = verify(triangle_f, cert, TOL, exact=False)
        assert not report.exact
        assert report.passed

    def test_non_edge_terms_ignored(self, path3):
        f = tent(path3, 1)
        cert = certify(f, TOL)
        extra = dict(cert.edge_terms)
        extra[(1, 3)] = (constant(path3, 5.0),)
        report = verify(f, Certificate(path3, cert.s_roots, extra), TOL)
        assert report.residual_ok
        assert "1-3" in report.support_note

    def test_count_check(self, path3):
        f = constant(path3, 5.0)
        roots = tuple(constant(path3, 1.0) for _ in range(5))
        report = verify(f, Certificate(path3, roots, {}), TOL)
        assert report.residual_ok
        assert not report.count_ok

    def test_complex_mismatch(self, triangle_f, path3):
        cert = tent_certificate(path3, [1, 1, 1])
        with pytest.raises(ComplexMismatch):
            verify(triangle_f, cert)


class TestTentCertificate:
    """Tests for certificates of nonnegative tent combinations."""

    def test_weighted_sum(self, star):
        weights = [1.0, 2.0, 0.0, 3.0, 1.0]
        cert = tent_certificate(star, weights)
        f = constant(star, 0.0)
        for v, w in zip(star.vertices, weights):
            f = f + tent(star, v) * w
        report = verify(f, cert, TOL)
        assert report.passed
        assert cert.degree == 2
        assert len(cert.s_roots) == 4

    def test_mapping_weights(self, path3):
        cert = tent_certificate(path3, {2: 4.0})
        assert verify(tent(path3, 2) * 4.0, cert, TOL).residual_ok

    def test_negative_weight(self, path3):
        with pytest.raises(ValueError):
            tent_certificate(path3, [1.0, -1.0, 0.0])

    def test_wrong_length(self, path3):
        with pytest.raises(ValueError):
            tent_certificate(path3, [1.0])


class TestQuadraticModule:
    """Tests for rewriting certificates over the tent generators."""

    def test_generators(self, fixtures_dir):
        f = load_function(fixtures_dir / "triangle.json").value
        cert = load_certificate(fixtures_dir / "triangle_cert.json", complex_=f.complex).value
        terms = qm_convert(cert)
        assert [t.label for t in terms] == ["1", "T1", "T2"]
        assert (expand_qm(f.complex, terms) - f).is_zero

    def test_no_edge_terms(self, path3):
        cert = tent_certificate(path3, [0.0, 0.0, 0.0])
        terms = qm_convert(cert)
        assert len(terms) == 1
        assert expand_qm(path3, terms).is_zero


class TestRandomNonneg:
    """Tests for the instance generator."""

    def test_deterministic(self, triangle):
        a = random_nonneg(triangle, 6, seed=9)
        b = random_nonneg(triangle, 6, seed=9)
        assert (a - b).is_zero

    def test_degree_and_sign(self, star):
        for seed in range(10):
            f = random_nonneg(star, 5, seed)
            assert f.degree <= 5
            assert is_nonneg(f).ok

    def test_negative_degree(self, triangle):
        with pytest.raises(ValueError):
            random_nonneg(triangle, -1, seed=0)
