"""
α-connections of a parametric family and their curvature.

Γ^(α)_{ij,k} = E[(∂ᵢ∂ⱼℓ + (1 - α)/2 ∂ᵢℓ ∂ⱼℓ) ∂ₖℓ] with ℓ = ln p. α = +1 is the
exponential connection, α = -1 the mixture connection and α = 0 the
Levi-Civita connection of the Fisher metric.
"""

import numpy as np

from src.evaluation.numerics import fd_jacobian
from src.manifold.families import ParametricFamily
from src.manifold.frames import fisher_metric


def christoffel_symbols(family: ParametricFamily, theta, alpha: float) -> np.ndarray:
    """Γᵐ_ij, shape (dim, dim, dim) indexed [m, i, j]."""
    p = family.prob(theta)
    d1 = family.log_prob_jacobian(theta)
    d2 = family.log_prob_hessian(theta)
    integrand = d2 + 0.5 * (1.0 - alpha) * np.einsum("wi,wj->wij", d1, d1)
    lowered = np.einsum("w,wij,wk->ijk", p, integrand, d1)
    g_inv = np.linalg.inv(fisher_metric(family, theta))
    return np.einsum("mk,ijk->mij", g_inv, lowered)


def riemann_tensor(family: ParametricFamily, theta, alpha: float) -> np.ndarray:
    """
    Rᵐ_ijk = ∂ⱼΓᵐ_ik - ∂ₖΓᵐ_ij + Γᵐ_jl Γˡ_ik - Γᵐ_kl Γˡ_ij.

    Derivatives of Γ by central differences.
    """
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    n = family.dim
    gamma = christoffel_symbols(family, theta, alpha)
    jac = fd_jacobian(lambda t: christoffel_symbols(family, t, alpha).ravel(), theta)
    d_gamma = jac.reshape(n, n, n, n)  # [m, i, j, derivative]
    R = np.transpose(d_gamma, (0, 1, 3, 2)) - d_gamma
    R += np.einsum("mjl,lik->mijk", gamma, gamma) - np.einsum("mkl,lij->mijk", gamma, gamma)
    return R


def alpha_connection_curvature(family: ParametricFamily, theta, alpha: float) -> float:
    """
    max |R_abcd| in a Fisher-orthonormal frame.

    Flat connections give 0; the α = 0 connection on the simplex has the
    constant curvature 1/4 of the radius-2 sphere.
    """
    R = riemann_tensor(family, theta, alpha)
    g = fisher_metric(family, theta)
    eigenvalues, vectors = np.linalg.eigh(g)
    E = vectors @ np.diag(eigenvalues**-0.5) @ vectors.T
    lowered = np.einsum("ml,lijk->mijk", g, R)
    orthonormal = np.einsum("mijk,ma,ib,jc,kd->abcd", lowered, E, E, E, E)
    return float(np.max(np.abs(orthonormal), initial=0.0))
