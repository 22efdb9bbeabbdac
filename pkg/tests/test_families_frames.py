import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.errors import DimensionMismatchError, NotInteriorError, ResidualTooLargeError, SingularFamilyError
from src.manifold.connections import alpha_connection_curvature, christoffel_symbols
from src.manifold.families import (
    Bernoulli,
    CallableFamily,
    CurvedExponentialFamily,
    ExponentialFamily,
    MixtureFamily,
    ReparametrizedFamily,
)
from src.manifold.frames import fisher_metric, maurer_cartan_forms, score_vectors


class TestFamilies:
    def test_full_family_matches_natural_coordinates(self):
        p = ExponentialFamily.full(3)([np.log(2.0), 0.0])
        assert_allclose(p.p, [0.5, 0.25, 0.25])

    def test_parameter_count(self):
        with pytest.raises(DimensionMismatchError):
            ExponentialFamily.full(3).log_prob([0.0])

    def test_mixture_leaves_simplex(self):
        with pytest.raises(NotInteriorError):
            MixtureFamily(3).prob([0.7, 0.4])

    def test_bernoulli_bounds(self):
        with pytest.raises(NotInteriorError):
            Bernoulli().prob([1.0])

    def test_analytic_derivatives_match_finite_differences(self, rng):
        base = ExponentialFamily.full(4)
        theta = rng.standard_normal(3)
        numeric = CallableFamily(base.prob, 4, 3)
        assert_allclose(base.log_prob_jacobian(theta), numeric.log_prob_jacobian(theta), atol=1e-8)
        assert_allclose(base.log_prob_hessian(theta), numeric.log_prob_hessian(theta), atol=1e-5)

    def test_curved_family_chain_rule(self):
        family = CurvedExponentialFamily(3)
        numeric = CallableFamily(family.prob, 3, 1)
        assert_allclose(family.log_prob_jacobian([0.4]), numeric.log_prob_jacobian([0.4]), atol=1e-8)
        assert_allclose(family.log_prob_hessian([0.4]), numeric.log_prob_hessian([0.4]), atol=1e-5)


class TestFisherMetric:
    def test_bernoulli(self):
        assert fisher_metric(Bernoulli(), [0.5]) == pytest.approx(np.array([[4.0]]))

    def test_full_family_is_covariance(self):
        g = fisher_metric(ExponentialFamily.full(3), np.zeros(2))
        assert_allclose(g, [[2 / 9, -1 / 9], [-1 / 9, 2 / 9]], atol=1e-15)

    def test_reparametrization_pulls_back(self, rng):
        M = np.array([[1.0, 0.5], [-0.3, 2.0]])
        base = ExponentialFamily.full(3)
        eta = rng.standard_normal(2)
        g = fisher_metric(ReparametrizedFamily(base, M), eta)
        assert_allclose(g, M.T @ fisher_metric(base, M @ eta) @ M, atol=1e-14)

    def test_collapsed_parameters(self):
        family = ReparametrizedFamily(ExponentialFamily.full(3), [[1.0, 1.0], [0.0, 0.0]])
        with pytest.raises(SingularFamilyError):
            fisher_metric(family, [0.2, 0.3])

    def test_scores_are_centered(self, rng):
        frame = score_vectors(ExponentialFamily.full(5), rng.standard_normal(4))
        assert frame.centering_defect() <= 1e-15


class TestMaurerCartan:
    def test_full_family(self, rng):
        forms = maurer_cartan_forms(ExponentialFamily.full(4), rng.standard_normal(3))
        assert forms.residual <= 1e-8
        assert forms.omega_ij.shape == (3, 3, 3)

    def test_mixture_chart(self):
        forms = maurer_cartan_forms(MixtureFamily(3), [0.2, 0.5])
        assert forms.residual <= 1e-8

    def test_bernoulli_closed_form(self):
        # ∂r = p·X and ∂X = -(1/(1-t)², 1/t²) at t = ½
        forms = maurer_cartan_forms(Bernoulli(), [0.5])
        assert forms.omega[0] == pytest.approx(0.0, abs=1e-12)
        assert forms.omega_s[0, 0] == pytest.approx(0.5)
        assert forms.omega_i[0, 0] == pytest.approx(-8.0)
        assert forms.omega_ij[0, 0, 0] == pytest.approx(0.0, abs=1e-12)

    def test_curved_subfamily(self):
        with pytest.raises(ResidualTooLargeError) as info:
            maurer_cartan_forms(CurvedExponentialFamily(4), [0.5])
        assert info.value.residual > 1e-6

    def test_finite_difference_family(self, rng):
        M = np.array([[1.0, 0.2], [0.4, -1.0]])
        base = ExponentialFamily.full(3)
        numeric = CallableFamily(lambda eta: base.prob(M @ eta), 3, 2)
        eta = 0.5 * rng.standard_normal(2)
        analytic = maurer_cartan_forms(ReparametrizedFamily(base, M), eta)
        approx = maurer_cartan_forms(numeric, eta)
        assert approx.residual <= 1e-5
        assert_allclose(approx.omega_ij, analytic.omega_ij, atol=1e-4)


class TestConnectionCurvature:
    def test_exponential_connection_vanishes_in_natural_coordinates(self, rng):
        assert_allclose(christoffel_symbols(ExponentialFamily.full(4), rng.standard_normal(3), 1.0), 0.0, atol=1e-12)

    def test_mixture_connection_vanishes_in_mixture_coordinates(self):
        assert_allclose(christoffel_symbols(MixtureFamily(4), [0.1, 0.3, 0.2], -1.0), 0.0, atol=1e-12)

    @pytest.mark.parametrize("alpha", [1.0, -1.0])
    def test_dually_flat(self, alpha):
        assert alpha_connection_curvature(ExponentialFamily.full(3), [0.3, -0.2], alpha) <= 1e-5

    def test_levi_civita_is_quarter_sphere(self):
        assert alpha_connection_curvature(ExponentialFamily.full(3), [0.3, -0.2], 0.0) == pytest.approx(0.25, abs=1e-4)
