"""
Pseudo-Euclidean bilinear forms B^n_l and Lorentzian causal structure.

B^n_l(x, y) = -Σ_{i≤l} xᵢyᵢ + Σ_{j>l} xⱼyⱼ, or xᵀGy for a dense symmetric G.
"""

import os
import sys
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import nnls

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.config import Config
from src.errors import (
    DimensionMismatchError,
    GeometryError,
    NotLorentzianError,
    NotSymmetricError,
    ZeroVectorError,
)


class CausalClass(Enum):
    TIMELIKE = "Timelike"
    NULL = "Null"
    SPACELIKE = "Spacelike"

    def __str__(self) -> str:
        return self.value


def _check_symmetric(G: np.ndarray, tol: float) -> None:
    if G.ndim != 2 or G.shape[0] != G.shape[1]:
        raise DimensionMismatchError(f"Gram matrix must be square, got {G.shape}")
    asymmetry = float(np.max(np.abs(G - G.T), initial=0.0))
    if asymmetry > tol:
        raise NotSymmetricError(f"max |G - Gᵀ| = {asymmetry:.3e} exceeds {tol:.1e}")


def signature_of_gram(G, tol: Optional[float] = None) -> Tuple[int, int, int]:
    """
    Signature (neg, zero, pos) of a symmetric matrix.

    Counts eigenvalues below -tol, within ±tol and above tol.
    """
    tol = Config.SIGNATURE_TOL if tol is None else tol
    G = np.asarray(G, dtype=float)
    _check_symmetric(G, max(tol, Config.SYMMETRY_TOL))
    eigenvalues = np.linalg.eigvalsh((G + G.T) / 2)
    neg = int(np.sum(eigenvalues < -tol))
    pos = int(np.sum(eigenvalues > tol))
    return neg, len(eigenvalues) - neg - pos, pos


@dataclass(frozen=True, eq=False)
class BilinearForm:
    """B^n_l in canonical diagonal form, or a dense symmetric Gram matrix."""

    dim: int
    index: int
    gram: Optional[np.ndarray] = None

    def __post_init__(self):
        if not 0 <= self.index <= self.dim:
            raise GeometryError(f"index {self.index} outside [0, {self.dim}]")
        if self.gram is not None:
            G = np.array(self.gram, dtype=float)
            if G.shape != (self.dim, self.dim):
                raise DimensionMismatchError(f"Gram shape {G.shape} for dim {self.dim}")
            _check_symmetric(G, Config.SYMMETRY_TOL * (1 + float(np.max(np.abs(G)))))
            G.setflags(write=False)
            object.__setattr__(self, "gram", G)

    @classmethod
    def lorentzian(cls, dim: int) -> "BilinearForm":
        return cls(dim, 1)

    @classmethod
    def from_gram(cls, G) -> "BilinearForm":
        G = np.asarray(G, dtype=float)
        neg, _, _ = signature_of_gram(G)
        return cls(G.shape[0], neg, G)

    def diagonal(self) -> np.ndarray:
        return np.array([-1.0] * self.index + [1.0] * (self.dim - self.index))

    def gram_matrix(self) -> np.ndarray:
        if self.gram is not None:
            return self.gram
        return np.diag(self.diagonal())

    def signature(self) -> Tuple[int, int, int]:
        if self.gram is None:
            return self.index, 0, self.dim - self.index
        return signature_of_gram(self.gram)

    def is_lorentzian(self) -> bool:
        return self.signature() == (1, 0, self.dim - 1)

    def timelike_axis(self) -> np.ndarray:
        """Unit vector spanning the negative eigenspace of an index-1 form."""
        if self.gram is None:
            axis = np.zeros(self.dim)
            axis[0] = 1.0
            return axis
        _, vectors = np.linalg.eigh(self.gram)
        return vectors[:, 0]


def bilinear_eval(B: BilinearForm, x, y) -> float:
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != (B.dim,) or y.shape != (B.dim,):
        raise DimensionMismatchError(
            f"vectors of shape {x.shape}, {y.shape} for a form of dim {B.dim}"
        )
    if B.gram is not None:
        return float(x @ B.gram @ y)
    l = B.index
    return float(-np.dot(x[:l], y[:l]) + np.dot(x[l:], y[l:]))


def causal_class(B: BilinearForm, x, tol: Optional[float] = None) -> CausalClass:
    """
    Classify x as Timelike, Null or Spacelike under a Lorentzian form.

    The quadratic form is evaluated on x/‖x‖, so the class is invariant under
    x ↦ λx; the default threshold is 2·CAUSAL_TOL.
    """
    if not B.is_lorentzian():
        raise NotLorentzianError(f"form has signature {B.signature()}, expected index 1")
    x = np.asarray(x, dtype=float)
    norm = float(np.linalg.norm(x))
    if norm == 0.0:
        raise ZeroVectorError("causal class of the zero vector is undefined")
    unit = x / norm
    tol = 2 * Config.CAUSAL_TOL if tol is None else tol
    q = bilinear_eval(B, unit, unit)
    if q < -tol:
        return CausalClass.TIMELIKE
    if q > tol:
        return CausalClass.SPACELIKE
    return CausalClass.NULL


def cone_is_self_dual(generators, samples: int = 1000, seed: int = Config.DEFAULT_SEED) -> bool:
    """
    Monte-Carlo check that the polyhedral cone spanned by the columns of
    `generators` equals its dual under the standard inner product.

    C ⊆ C*: generators and sampled cone points pair non-negatively.
    C* ⊆ C: every sampled point outside C is separated by some witness a ∈ C
    (a generator or a sampled cone point) with ⟨c, a⟩ < 0.
    """
    G = np.asarray(generators, dtype=float)
    if G.ndim != 2 or 0 in G.shape:
        raise DimensionMismatchError(f"generators must be a non-empty matrix, got shape {G.shape}")
    dim, rays = G.shape
    rng = np.random.default_rng(seed)
    tol = Config.CONE_TOL

    cone = np.vstack([G.T, rng.exponential(size=(samples, rays)) @ G.T])
    norms = np.linalg.norm(cone, axis=1)
    if np.any(cone @ cone.T < -tol * np.outer(norms, norms)):
        return False

    for c in rng.standard_normal(size=(samples, dim)):
        _, residual = nnls(G, c)
        if residual <= tol * np.linalg.norm(c):
            continue
        if np.min(cone @ c) >= 0:
            return False
    return True


def orthant_is_self_dual(dim: int, samples: int = 1000, seed: int = Config.DEFAULT_SEED) -> bool:
    """The positive orthant of ℝⁿ, generated by the standard basis."""
    if dim < 1:
        raise GeometryError("orthant dimension must be at least 1")
    return cone_is_self_dual(np.eye(dim), samples, seed)


def timelike_caps(
    B: BilinearForm,
    samples: int = 1000,
    seed: int = Config.DEFAULT_SEED,
    walk_points: int = 32,
) -> Tuple[bool, bool]:
    """
    Sampled shape of the light cone on the unit sphere.

    Returns (both_signs, connected): whether B(x, x) takes both signs on the
    sphere, and whether every timelike sample reaches ±(timelike axis) along
    a great circle without leaving the timelike region.
    """
    if not B.is_lorentzian():
        raise NotLorentzianError(f"form has signature {B.signature()}, expected index 1")
    rng = np.random.default_rng(seed)
    points = rng.standard_normal(size=(samples, B.dim))
    points /= np.linalg.norm(points, axis=1, keepdims=True)
    G = B.gram_matrix()
    tol = 2 * Config.CAUSAL_TOL
    q = np.einsum("ij,jk,ik->i", points, G, points)
    both_signs = bool(np.any(q < -tol) and np.any(q > tol))

    axis = B.timelike_axis()
    ts = np.linspace(0.0, 1.0, walk_points)
    connected = True
    for x in points[q < -tol]:
        target = axis if x @ axis >= 0 else -axis
        path = (1 - ts)[:, None] * x + ts[:, None] * target
        path /= np.linalg.norm(path, axis=1, keepdims=True)
        if np.any(np.einsum("ij,jk,ik->i", path, G, path) >= -tol):
            connected = False
            break
    return both_signs, connected


if __name__ == "__main__":
    B = BilinearForm.lorentzian(3)
    print(f"B³₁((1,2,0), (0,1,3)) = {bilinear_eval(B, [1, 2, 0], [0, 1, 3])}")
    print(f"causal class of (0.5, 0.3, 0.4): {causal_class(B, [0.5, 0.3, 0.4])}")
    print(f"signature of B⁵₁: {signature_of_gram(BilinearForm.lorentzian(5).gram_matrix())}")
    print(f"timelike caps: {timelike_caps(B, samples=200)}")
