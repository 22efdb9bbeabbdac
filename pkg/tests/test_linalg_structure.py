import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.algebra.linalg import PcMatrix, PcVector, hermitian_inner
from src.algebra.paracomplex import EPSILON, ONE, AlgebraKind, Paracomplex
from src.algebra.structure import (
    KStructure,
    cauchy_riemann_residual,
    k_split,
    multiplication_matrix,
    paraholomorphy_residual,
)
from src.errors import DimensionMismatchError, NotInvolutiveError


class TestPcVector:
    def test_from_components(self):
        v = PcVector.from_components([ONE, EPSILON])
        assert_allclose(v.plus, [1.0, 1.0])
        assert_allclose(v.minus, [1.0, -1.0])
        assert v.to_xy() == [(1.0, 0.0), (0.0, 1.0)]

    def test_immutable(self):
        v = PcVector.real([1.0, 2.0])
        with pytest.raises(ValueError):
            v.plus[0] = 5.0

    def test_sheet_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            PcVector([1.0, 2.0], [1.0])

    def test_scale_and_conj(self):
        v = PcVector.from_xy([[1, 0], [0, 1]])
        scaled = v.scale(Paracomplex(2.0, 3.0))
        assert_allclose(scaled.plus, [2.0, 2.0])
        assert_allclose(scaled.minus, [3.0, -3.0])
        assert_allclose(v.conj().plus, v.minus)


class TestHermitianInner:
    def test_orthogonal_basis(self):
        u = PcVector.real([1.0, 0.0])
        v = PcVector.real([0.0, 1.0])
        assert hermitian_inner(u, v) == Paracomplex(0.0, 0.0)

    def test_null_vector(self):
        u = PcVector.from_components([ONE, EPSILON])
        assert hermitian_inner(u, u) == Paracomplex(0.0, 0.0)

    def test_real_vectors(self):
        u = PcVector.real([1.0, 1.0])
        assert hermitian_inner(u, u) == Paracomplex(2.0, 2.0)

    def test_conjugate_symmetry(self, rng):
        u = PcVector(rng.standard_normal(3), rng.standard_normal(3))
        v = PcVector(rng.standard_normal(3), rng.standard_normal(3))
        uv = hermitian_inner(u, v)
        vu = hermitian_inner(v, u)
        assert uv.plus == pytest.approx(vu.minus)
        assert uv.minus == pytest.approx(vu.plus)

    def test_length_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            hermitian_inner(PcVector.real([1.0]), PcVector.real([1.0, 2.0]))


class TestPcMatrix:
    def test_apply(self):
        M = PcMatrix.diagonal([Paracomplex(2.0, 3.0), ONE])
        image = M @ PcVector.real([1.0, 1.0])
        assert_allclose(image.plus, [2.0, 1.0])
        assert_allclose(image.minus, [3.0, 1.0])

    def test_conj_transpose(self):
        M = PcMatrix([[1.0, 2.0], [3.0, 4.0]], [[5.0, 6.0], [7.0, 8.0]])
        H = M.conj_transpose()
        assert_allclose(H.plus, M.minus.T)
        assert_allclose(H.minus, M.plus.T)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            PcMatrix.identity(2) @ PcVector.real([1.0, 2.0, 3.0])


class TestKStructure:
    def test_canonical_split(self):
        plus, minus = k_split(KStructure(np.diag([1.0, -1.0])), [3.0, 5.0])
        assert_allclose(plus, [3.0, 0.0])
        assert_allclose(minus, [0.0, 5.0])

    def test_zero_vector(self):
        plus, minus = k_split(KStructure.canonical(1), [0.0, 0.0])
        assert_allclose(plus, [0.0, 0.0])
        assert_allclose(minus, [0.0, 0.0])

    def test_swap(self):
        swap = KStructure(np.array([[0.0, 1.0], [1.0, 0.0]]))
        plus, minus = k_split(swap, [1.0, 0.0])
        assert_allclose(plus, [0.5, 0.5])
        assert_allclose(minus, [0.5, -0.5])
        assert swap.is_paracomplex()

    def test_not_involutive(self):
        with pytest.raises(NotInvolutiveError):
            k_split(KStructure(np.diag([2.0, 1.0])), [1.0, 1.0])

    def test_unbalanced_eigenspaces(self):
        K = KStructure(np.diag([1.0, 1.0, -1.0]))
        assert K.eigenspace_dims() == (2, 1)
        assert not K.is_paracomplex()

    def test_adapted_basis(self):
        swap = KStructure(np.array([[0.0, 1.0], [1.0, 0.0]]))
        basis = swap.adapted_basis()
        assert_allclose(basis.T @ basis, np.eye(2), atol=1e-12)
        assert_allclose(swap.matrix @ basis[:, 0], basis[:, 0], atol=1e-12)
        assert_allclose(swap.matrix @ basis[:, 1], -basis[:, 1], atol=1e-12)


class TestParaholomorphy:
    def test_square_is_paraholomorphic(self):
        assert paraholomorphy_residual(lambda w: w * w, Paracomplex.from_xy(1.0, 1.0)) <= 1e-6

    def test_conjugation_is_not(self):
        assert paraholomorphy_residual(lambda w: w.conj(), ONE) == pytest.approx(1.0, abs=1e-6)

    def test_constant(self):
        assert paraholomorphy_residual(lambda w: Paracomplex(2.0, 3.0), ONE) == 0.0

    def test_non_finite_gives_nan(self):
        f = lambda w: Paracomplex(np.log(w.plus - 2.0), w.minus)
        assert np.isnan(paraholomorphy_residual(f, Paracomplex(2.0, 1.0)))

    def test_polynomial_residual_at_any_step(self):
        f = lambda w: w * w * w
        z = Paracomplex(1.3, -0.7)
        coarse = paraholomorphy_residual(f, z, step=1e-2)
        fine = paraholomorphy_residual(f, z, step=1e-3)
        # polynomial maps have exactly separable sheets
        assert coarse <= 1e-9 and fine <= 1e-9


class TestCauchyRiemann:
    def test_multiplication_by_epsilon(self):
        assert_allclose(multiplication_matrix(AlgebraKind.PARACOMPLEX), [[0.0, 1.0], [1.0, 0.0]])
        assert_allclose(multiplication_matrix(AlgebraKind.COMPLEX), [[0.0, -1.0], [1.0, 0.0]])

    def test_paracomplex_square(self):
        # z² = (x² + y²) + ε·2xy
        f = lambda v: np.array([v[0] ** 2 + v[1] ** 2, 2 * v[0] * v[1]])
        assert cauchy_riemann_residual(f, [0.4, -1.1]) <= 1e-8

    def test_complex_square(self):
        # z² = (x² - y²) + i·2xy
        f = lambda v: np.array([v[0] ** 2 - v[1] ** 2, 2 * v[0] * v[1]])
        assert cauchy_riemann_residual(f, [0.4, -1.1], AlgebraKind.COMPLEX) <= 1e-8
        assert cauchy_riemann_residual(f, [0.4, -1.1], AlgebraKind.PARACOMPLEX) > 1.0

    def test_agrees_with_paraholomorphy(self):
        def f_real(v):
            z = Paracomplex.from_xy(v[0], v[1])
            w = Paracomplex(np.sin(z.plus), np.exp(z.minus))
            return np.array([w.x, w.y])

        point = [0.3, 0.2]
        assert cauchy_riemann_residual(f_real, point) <= 1e-8
        g = lambda v: np.array([v[0], 0.0])
        assert cauchy_riemann_residual(g, point) == pytest.approx(1.0, abs=1e-8)
