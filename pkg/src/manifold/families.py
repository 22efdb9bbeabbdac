"""
Parametric families θ ↦ p(θ) on a finite sample space.

Every family exposes ln p together with its first and second θ-derivatives.
Families with closed forms set `analytic = True`; the rest fall back to
central finite differences.
"""

import os
import sys
from abc import ABC, abstractmethod
from typing import Callable, Optional

import numpy as np
from scipy.special import logsumexp

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.errors import DimensionMismatchError, GeometryError, NotInteriorError
from src.evaluation.numerics import fd_hessian, fd_jacobian
from src.manifold.simplex import ProbDist


class ParametricFamily(ABC):
    """Base class: `atoms` outcomes, `dim` parameters."""

    analytic = False

    def __init__(self, atoms: int, dim: int, name: str):
        if atoms < 2:
            raise GeometryError(f"a family needs at least 2 atoms, got {atoms}")
        self.atoms = atoms
        self.dim = dim
        self.name = name

    def _theta(self, theta) -> np.ndarray:
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        if theta.shape != (self.dim,):
            raise DimensionMismatchError(f"{self.name} takes {self.dim} parameters, got {theta.shape}")
        return theta

    @abstractmethod
    def log_prob(self, theta) -> np.ndarray:
        """ln p(ω; θ) for every atom ω."""

    def prob(self, theta) -> np.ndarray:
        return np.exp(self.log_prob(theta))

    def __call__(self, theta) -> ProbDist:
        p = self.prob(theta)
        return ProbDist(p / np.sum(p))

    def log_prob_jacobian(self, theta) -> np.ndarray:
        """∂ₖ ln p(ω), shape (atoms, dim)."""
        return fd_jacobian(self.log_prob, self._theta(theta))

    def log_prob_hessian(self, theta) -> np.ndarray:
        """∂ₖ∂ₗ ln p(ω), shape (atoms, dim, dim)."""
        return fd_hessian(self.log_prob, self._theta(theta))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, atoms={self.atoms}, dim={self.dim})"


class ExponentialFamily(ParametricFamily):
    """
    ln p = ln h + Tθ - A(θ), A(θ) = ln Σ h·exp(Tθ).

    `full(n)` uses T = [I; 0], whose parameters are the natural coordinates
    θᵢ = ln pᵢ - ln pₙ.
    """

    analytic = True

    def __init__(self, statistics, log_base=None, name: str = "exponential"):
        T = np.asarray(statistics, dtype=float)
        if T.ndim != 2:
            raise DimensionMismatchError(f"sufficient statistics must be a matrix, got {T.shape}")
        super().__init__(T.shape[0], T.shape[1], name)
        self.statistics = T
        self.log_base = np.zeros(self.atoms) if log_base is None else np.asarray(log_base, dtype=float)

    @classmethod
    def full(cls, atoms: int) -> "ExponentialFamily":
        return cls(np.vstack([np.eye(atoms - 1), np.zeros((1, atoms - 1))]), name=f"full-exp-{atoms}")

    def log_partition(self, theta) -> float:
        return float(logsumexp(self.log_base + self.statistics @ self._theta(theta)))

    def log_prob(self, theta) -> np.ndarray:
        exponent = self.log_base + self.statistics @ self._theta(theta)
        return exponent - logsumexp(exponent)

    def mean_statistics(self, theta) -> np.ndarray:
        return self.prob(theta) @ self.statistics

    def log_prob_jacobian(self, theta) -> np.ndarray:
        return self.statistics - self.mean_statistics(theta)

    def log_prob_hessian(self, theta) -> np.ndarray:
        p = self.prob(theta)
        centered = self.statistics - p @ self.statistics
        covariance = centered.T @ (p[:, None] * centered)
        return np.broadcast_to(-covariance, (self.atoms, self.dim, self.dim)).copy()


class MixtureFamily(ParametricFamily):
    """p = (θ₁, ..., θₙ₋₁, 1 - Σθ): the mixture (m-affine) chart."""

    analytic = True

    def __init__(self, atoms: int, name: Optional[str] = None):
        super().__init__(atoms, atoms - 1, name or f"mixture-{atoms}")
        # ∂ₖp(ω) = δ(ω,k) - δ(ω,n)
        self._dp = np.vstack([np.eye(atoms - 1), -np.ones((1, atoms - 1))])

    def prob(self, theta) -> np.ndarray:
        theta = self._theta(theta)
        p = np.append(theta, 1.0 - np.sum(theta))
        if np.any(p <= 0):
            raise NotInteriorError(f"θ = {theta.tolist()} leaves the open simplex")
        return p

    def log_prob(self, theta) -> np.ndarray:
        return np.log(self.prob(theta))

    def log_prob_jacobian(self, theta) -> np.ndarray:
        return self._dp / self.prob(theta)[:, None]

    def log_prob_hessian(self, theta) -> np.ndarray:
        p = self.prob(theta)
        return -np.einsum("wk,wl->wkl", self._dp, self._dp) / (p**2)[:, None, None]


class Bernoulli(ParametricFamily):
    """Atoms (0, 1) with p = (1 - θ, θ)."""

    analytic = True

    def __init__(self):
        super().__init__(2, 1, "bernoulli")

    def prob(self, theta) -> np.ndarray:
        (t,) = self._theta(theta)
        if not 0.0 < t < 1.0:
            raise NotInteriorError(f"Bernoulli mean {t} outside (0, 1)")
        return np.array([1.0 - t, t])

    def log_prob(self, theta) -> np.ndarray:
        return np.log(self.prob(theta))

    def log_prob_jacobian(self, theta) -> np.ndarray:
        p = self.prob(theta)
        return np.array([[-1.0 / p[0]], [1.0 / p[1]]])

    def log_prob_hessian(self, theta) -> np.ndarray:
        p = self.prob(theta)
        return np.array([[[-1.0 / p[0] ** 2]], [[-1.0 / p[1] ** 2]]])


class CurvedExponentialFamily(ParametricFamily):
    """
    One-parameter subfamily t ↦ θ(t) of the full exponential family.

    The default curve is θ(t) = (t, t², ..., tⁿ⁻¹).
    """

    analytic = True

    def __init__(
        self,
        atoms: int,
        curve: Optional[Callable[[float], np.ndarray]] = None,
        velocity: Optional[Callable[[float], np.ndarray]] = None,
        acceleration: Optional[Callable[[float], np.ndarray]] = None,
    ):
        super().__init__(atoms, 1, f"curved-exp-{atoms}")
        self.ambient = ExponentialFamily.full(atoms)
        powers = np.arange(1, atoms)
        self.curve = curve or (lambda t: t**powers)
        self.velocity = velocity or (lambda t: powers * t ** (powers - 1))
        self.acceleration = acceleration or (
            lambda t: powers * (powers - 1) * t ** np.maximum(powers - 2, 0)
        )

    def log_prob(self, theta) -> np.ndarray:
        (t,) = self._theta(theta)
        return self.ambient.log_prob(self.curve(t))

    def log_prob_jacobian(self, theta) -> np.ndarray:
        (t,) = self._theta(theta)
        return self.ambient.log_prob_jacobian(self.curve(t)) @ self.velocity(t)[:, None]

    def log_prob_hessian(self, theta) -> np.ndarray:
        (t,) = self._theta(theta)
        eta = self.curve(t)
        v = self.velocity(t)
        ambient_hessian = self.ambient.log_prob_hessian(eta)
        second = np.einsum("wkl,k,l->w", ambient_hessian, v, v)
        second += self.ambient.log_prob_jacobian(eta) @ self.acceleration(t)
        return second[:, None, None]


class ReparametrizedFamily(ParametricFamily):
    """base(M·η + b); derivatives follow by the chain rule."""

    def __init__(self, base: ParametricFamily, matrix, offset=None):
        M = np.atleast_2d(np.asarray(matrix, dtype=float))
        if M.shape[0] != base.dim:
            raise DimensionMismatchError(f"map of shape {M.shape} into {base.dim} parameters")
        super().__init__(base.atoms, M.shape[1], f"{base.name}-reparam")
        self.base = base
        self.matrix = M
        self.offset = np.zeros(base.dim) if offset is None else np.asarray(offset, dtype=float)
        self.analytic = base.analytic

    def to_base(self, eta) -> np.ndarray:
        return self.matrix @ self._theta(eta) + self.offset

    def log_prob(self, eta) -> np.ndarray:
        return self.base.log_prob(self.to_base(eta))

    def prob(self, eta) -> np.ndarray:
        return self.base.prob(self.to_base(eta))

    def log_prob_jacobian(self, eta) -> np.ndarray:
        return self.base.log_prob_jacobian(self.to_base(eta)) @ self.matrix

    def log_prob_hessian(self, eta) -> np.ndarray:
        H = self.base.log_prob_hessian(self.to_base(eta))
        return np.einsum("wkl,ka,lb->wab", H, self.matrix, self.matrix)


class CallableFamily(ParametricFamily):
    """Arbitrary θ ↦ p(θ); derivatives by finite differences."""

    def __init__(self, fn: Callable[[np.ndarray], np.ndarray], atoms: int, dim: int, name: str = "callable"):
        super().__init__(atoms, dim, name)
        self.fn = fn

    def prob(self, theta) -> np.ndarray:
        p = np.asarray(self.fn(self._theta(theta)), dtype=float)
        if p.shape != (self.atoms,):
            raise DimensionMismatchError(f"family returned shape {p.shape}, expected ({self.atoms},)")
        if np.any(p <= 0):
            raise NotInteriorError(f"family left the open simplex at θ = {np.asarray(theta).tolist()}")
        return p

    def log_prob(self, theta) -> np.ndarray:
        return np.log(self.prob(theta))
