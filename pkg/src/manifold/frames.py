"""
Score frames and Maurer-Cartan coefficient extraction.

For a family θ ↦ p(θ) the frame at θ is the polar vector r = p together with
the score vectors Xⱼ = ∂ⱼ ln p. The structure equations

    ∂ₖr  = ω(∂ₖ) r + ωˢ(∂ₖ) X_s
    ∂ₖXᵢ = ωᵢ(∂ₖ) r + ωᵢʲ(∂ₖ) Xⱼ

close without normal terms exactly when the family is full-dimensional.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.config import Config
from src.errors import FrameDegenerateError, ResidualTooLargeError, SingularFamilyError
from src.manifold.families import ParametricFamily


@dataclass(frozen=True, eq=False)
class Frame:
    r: np.ndarray
    X: np.ndarray

    def matrix(self) -> np.ndarray:
        """[r | X₁ ... Xₙ], shape (atoms, n + 1)."""
        return np.column_stack([self.r, self.X])

    def centering_defect(self) -> float:
        """max |Σ_ω p(ω) Xⱼ(ω)|."""
        return float(np.max(np.abs(self.r @ self.X), initial=0.0))


@dataclass(frozen=True, eq=False)
class ConnectionForms:
    """
    Coefficients per parameter direction k:
    omega[k], omega_s[k, s], omega_i[k, i], omega_ij[k, i, j].
    """

    omega: np.ndarray
    omega_s: np.ndarray
    omega_i: np.ndarray
    omega_ij: np.ndarray
    residual: float


def score_vectors(family: ParametricFamily, theta) -> Frame:
    return Frame(r=family.prob(theta), X=family.log_prob_jacobian(theta))


def fisher_metric(family: ParametricFamily, theta) -> np.ndarray:
    """g_ij = Σ_ω p(ω) ∂ᵢln p(ω) ∂ⱼln p(ω)."""
    frame = score_vectors(family, theta)
    g = frame.X.T @ (frame.r[:, None] * frame.X)
    g = (g + g.T) / 2
    eigenvalues = np.linalg.eigvalsh(g)
    if eigenvalues[0] <= Config.FAMILY_RANK_RTOL * max(eigenvalues[-1], np.finfo(float).tiny):
        raise SingularFamilyError(f"{family.name} has a rank-deficient Fisher metric at θ = {np.ravel(theta).tolist()}")
    return g


def maurer_cartan_forms(
    family: ParametricFamily, theta, tol: Optional[float] = None
) -> ConnectionForms:
    """
    Solve the structure equations in the frame {r, X} by least squares.

    Raises FrameDegenerateError when the frame does not have full column
    rank and ResidualTooLargeError when the derivatives leave its span.
    """
    if tol is None:
        tol = Config.tolerance("analytic" if family.analytic else "finite_difference")
    frame = score_vectors(family, theta)
    F = frame.matrix()
    n = family.dim

    singular = np.linalg.svd(F, compute_uv=False)
    if singular[-1] <= Config.FAMILY_RANK_RTOL * singular[0]:
        raise FrameDegenerateError(f"frame of {family.name} is rank-deficient")

    H = family.log_prob_hessian(theta)
    # column block k: [∂ₖr, ∂ₖX₁, ..., ∂ₖXₙ]; ∂ₖr = p·Xₖ in m-coordinates
    blocks = [np.column_stack([frame.r * frame.X[:, k], H[:, :, k]]) for k in range(n)]
    rhs = np.hstack(blocks)

    coefficients, _, _, _ = np.linalg.lstsq(F, rhs, rcond=None)
    # relative per column; an all-zero column is reproduced exactly by lstsq
    column_norms = np.linalg.norm(rhs, axis=0)
    errors = np.linalg.norm(F @ coefficients - rhs, axis=0)
    residual = float(np.max(errors / np.where(column_norms > 0, column_norms, 1.0)))
    if residual > tol:
        raise ResidualTooLargeError(
            f"{family.name}: frame decomposition residual {residual:.3e} exceeds {tol:.1e}",
            residual,
        )

    C = coefficients.reshape(n + 1, n, n + 1)  # (frame element, k, column within block)
    return ConnectionForms(
        omega=C[0, :, 0].copy(),
        omega_s=C[1:, :, 0].T.copy(),
        omega_i=C[0, :, 1:].copy(),
        omega_ij=np.transpose(C[1:, :, 1:], (1, 2, 0)).copy(),
        residual=residual,
    )
