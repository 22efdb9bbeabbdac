import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.algebra.linalg import PcMatrix, PcVector
from src.algebra.paracomplex import EPSILON, ONE
from src.errors import LineMissesQuadricError, NotHermitianError, NotTangentError, NotUnitError
from src.geometry.cover import (
    cover_fiber,
    double_cover,
    geodesic_rpn_product,
    orientable,
    rp_distance,
    sphere_distance,
)
from src.geometry.projective import (
    ProjectivePoint,
    RealProjectivePair,
    hermitian_distance,
    same_real_point,
)
from src.geometry.quadric import (
    Hyperquadric,
    cross_ratio_distance,
    cross_ratio_distance_report,
    hyperquadric_eval,
    polar_points,
)


class TestHyperquadric:
    def test_absolute_contains_epsilon_point(self):
        assert hyperquadric_eval(Hyperquadric.identity(1), ProjectivePoint.from_components([ONE, EPSILON])) == 0.0

    def test_outside(self):
        assert hyperquadric_eval(Hyperquadric.identity(1), ProjectivePoint.real([1.0, 0.0])) == 1.0

    def test_shifted(self):
        Q = Hyperquadric.identity(1, c=-2.0)
        assert hyperquadric_eval(Q, ProjectivePoint.real([1.0, 1.0])) == 0.0
        assert Q.contains(ProjectivePoint.real([1.0, 1.0]))

    def test_not_hermitian(self):
        with pytest.raises(NotHermitianError):
            Hyperquadric(PcMatrix([[1.0, 2.0], [0.0, 1.0]], [[1.0, 2.0], [0.0, 1.0]]))

    def test_polar_points_are_conjugate(self, rng):
        Q = Hyperquadric.identity(2)
        X = ProjectivePoint.real(rng.standard_normal(3))
        Y = ProjectivePoint.real(rng.standard_normal(3))
        alpha, beta = polar_points(X, Y, Q)
        for point, polar in ((X, alpha), (Y, beta)):
            scale = np.linalg.norm(point.coords.plus) * np.linalg.norm(polar.coords.plus)
            assert abs(Q.form(point.coords, polar.coords).x) <= 1e-12 * scale


class TestCrossRatioDistance:
    def test_same_point(self):
        X = ProjectivePoint.real([1.0, 2.0])
        assert cross_ratio_distance(X, X, Hyperquadric.identity(1)) == 0.0

    def test_quarter_turn(self):
        X, Y = ProjectivePoint.real([1.0, 0.0]), ProjectivePoint.real([1.0, 1.0])
        assert cross_ratio_distance(X, Y, Hyperquadric.identity(1)) == pytest.approx(np.pi / 4)

    def test_matches_hermitian_distance(self, rng):
        Q = Hyperquadric.identity(3)
        for _ in range(20):
            X = ProjectivePoint.real(np.abs(rng.standard_normal(4)))
            Y = ProjectivePoint.real(np.abs(rng.standard_normal(4)))
            assert cross_ratio_distance(X, Y, Q, r=2.0) == pytest.approx(hermitian_distance(X, Y, r=2.0), abs=1e-8)

    def test_report_records_clamping(self):
        X, Y = ProjectivePoint.real([1.0, 0.0]), ProjectivePoint.real([0.0, 1.0])
        report = cross_ratio_distance_report(X, Y, Hyperquadric.identity(1))
        assert report.value == pytest.approx(np.pi / 2)
        assert report.clamped_by == 0.0

    def test_shared_sheet(self):
        X = ProjectivePoint.from_coords(PcVector([1.0, 0.0], [1.0, 0.0]))
        Y = ProjectivePoint.from_coords(PcVector([1.0, 0.0], [1.0, 1.0]))
        with pytest.raises(LineMissesQuadricError):
            cross_ratio_distance(X, Y, Hyperquadric.identity(1))


class TestDoubleCover:
    def test_projection(self):
        rep, deck = double_cover([1.0, 0.0, 0.0])
        assert_allclose(rep, [1.0, 0.0, 0.0])
        assert_allclose(deck, [-1.0, 0.0, 0.0])

    def test_antipodes_share_a_class(self):
        q = np.array([0.0, -0.6, 0.8])
        assert_allclose(double_cover(q)[0], double_cover(-q)[0])

    def test_not_unit(self):
        with pytest.raises(NotUnitError):
            double_cover([1.0, 1.0])

    def test_fiber(self):
        first, second = cover_fiber([0.0, 3.0])
        assert_allclose(first, [0.0, 1.0])
        assert_allclose(second, [0.0, -1.0])

    def test_quotient_distance(self, rng):
        for _ in range(50):
            a = rng.standard_normal(4)
            b = rng.standard_normal(4)
            a, b = a / np.linalg.norm(a), b / np.linalg.norm(b)
            theta = sphere_distance(a, b)
            assert rp_distance(a, b) == pytest.approx(min(theta, np.pi - theta), abs=1e-10)
            assert sphere_distance(-a, -b) == theta


class TestProductGeodesic:
    def test_constant_path(self):
        start = RealProjectivePair([1.0, 0.0], [0.6, 0.8])
        end = geodesic_rpn_product(start, (np.zeros(2), np.zeros(2)), 5.0)
        assert_allclose(end.left, [1.0, 0.0])
        assert_allclose(end.right, [0.6, 0.8])

    def test_quarter_circle(self):
        start = RealProjectivePair([1.0, 0.0], [1.0, 0.0])
        end = geodesic_rpn_product(start, (np.array([0.0, 1.0]), np.zeros(2)), np.pi / 2)
        assert same_real_point(end.left, [0.0, 1.0])
        assert same_real_point(end.right, [1.0, 0.0])

    def test_not_tangent(self):
        start = RealProjectivePair([1.0, 0.0], [1.0, 0.0])
        with pytest.raises(NotTangentError):
            geodesic_rpn_product(start, (np.array([1.0, 1.0]), np.zeros(2)), 1.0)

    def test_requires_unit_representatives(self):
        start = RealProjectivePair([2.0, 0.0], [1.0, 0.0])
        with pytest.raises(NotUnitError):
            geodesic_rpn_product(start, (np.zeros(2), np.zeros(2)), 1.0)


@pytest.mark.parametrize("n, expected", [(1, True), (2, False), (3, True), (4, False), (7, True)])
def test_orientability(n, expected):
    assert orientable(n) is expected
