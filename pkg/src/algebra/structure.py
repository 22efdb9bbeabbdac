"""
Paracomplex structures on real vector spaces and paraholomorphy tests.

A paracomplex structure is an involution K (K² = I) whose ±1 eigenspaces have
equal dimension. Paraholomorphic maps are the ones whose (+) part depends only
on z₊ and whose (-) part depends only on z₋.
"""

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
import scipy.linalg

from src.algebra.paracomplex import AlgebraKind, Paracomplex, structure_constants
from src.config import Config
from src.errors import DimensionMismatchError, NonFiniteError, NotInvolutiveError
from src.evaluation.numerics import fd_jacobian


@dataclass(frozen=True, eq=False)
class KStructure:
    """Endomorphism K of a 2m-dimensional real space."""

    matrix: np.ndarray

    def __post_init__(self):
        K = np.array(self.matrix, dtype=float)
        if K.ndim != 2 or K.shape[0] != K.shape[1]:
            raise DimensionMismatchError(f"K must be square, got shape {K.shape}")
        K.setflags(write=False)
        object.__setattr__(self, "matrix", K)

    @classmethod
    def canonical(cls, m: int) -> "KStructure":
        """diag(I_m, -I_m)."""
        return cls(np.diag([1.0] * m + [-1.0] * m))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def involution_defect(self) -> float:
        K = self.matrix
        return float(np.max(np.abs(K @ K - np.eye(self.dim)), initial=0.0))

    def check_involutive(self, tol: Optional[float] = None) -> None:
        tol = Config.INVOLUTION_TOL if tol is None else tol
        defect = self.involution_defect()
        if defect > tol:
            raise NotInvolutiveError(f"‖K²-I‖ = {defect:.3e} exceeds {tol:.1e}")

    def projectors(self) -> Tuple[np.ndarray, np.ndarray]:
        identity = np.eye(self.dim)
        return (identity + self.matrix) / 2, (identity - self.matrix) / 2

    def eigenspace_dims(self) -> Tuple[int, int]:
        """(dim E₊, dim E₋)."""
        self.check_involutive()
        p_plus, p_minus = self.projectors()
        return (
            int(np.linalg.matrix_rank(p_plus)),
            int(np.linalg.matrix_rank(p_minus)),
        )

    def is_paracomplex(self) -> bool:
        plus, minus = self.eigenspace_dims()
        return plus == minus and plus + minus == self.dim

    def adapted_basis(self) -> np.ndarray:
        """Columns: an orthonormal basis of E₊ followed by one of E₋."""
        self.check_involutive()
        p_plus, p_minus = self.projectors()
        return np.hstack([scipy.linalg.orth(p_plus), scipy.linalg.orth(p_minus)])


def k_split(K: KStructure, v) -> Tuple[np.ndarray, np.ndarray]:
    """Split v = v₊ + v₋ with K v± = ±v±, using v± = (v ± Kv)/2."""
    K.check_involutive()
    v = np.asarray(v, dtype=float)
    if v.shape != (K.dim,):
        raise DimensionMismatchError(f"vector of shape {v.shape} for K of dim {K.dim}")
    Kv = K.matrix @ v
    return (v + Kv) / 2, (v - Kv) / 2


def _sheet_jacobian(f: Callable[[Paracomplex], Paracomplex], z: Paracomplex, step) -> np.ndarray:
    def sheets(w: np.ndarray) -> np.ndarray:
        image = f(Paracomplex(float(w[0]), float(w[1])))
        return np.array([image.plus, image.minus], dtype=float)

    return fd_jacobian(sheets, np.array([z.plus, z.minus], dtype=float), step)


def paraholomorphy_residual(
    f: Callable[[Paracomplex], Paracomplex],
    z: Paracomplex,
    step: Optional[float] = None,
) -> float:
    """
    max(|∂f₊/∂z₋|, |∂f₋/∂z₊|) by central differences.

    Zero up to truncation error iff f is paraholomorphic at z. Non-finite
    samples give NaN.
    """
    try:
        J = _sheet_jacobian(f, z, step)
    except NonFiniteError:
        return float("nan")
    return float(max(abs(J[0, 1]), abs(J[1, 0])))


def multiplication_matrix(kind: AlgebraKind = AlgebraKind.PARACOMPLEX) -> np.ndarray:
    """Real matrix of w ↦ ε·w in the basis (1, ε)."""
    C = structure_constants(kind)
    return C[:, 1, :]


def cauchy_riemann_residual(
    f_real: Callable[[np.ndarray], np.ndarray],
    point,
    kind: AlgebraKind = AlgebraKind.PARACOMPLEX,
    step: Optional[float] = None,
) -> float:
    """
    Generalized Cauchy-Riemann defect of a map ℝ² → ℝ² written in (1, ε).

    f is holomorphic over the algebra iff its real Jacobian commutes with
    multiplication by ε, i.e. J·L_ε = L_ε·J. For the paracomplex kind this is
    u_x = v_y, u_y = v_x.
    """
    try:
        J = fd_jacobian(f_real, np.asarray(point, dtype=float), step)
    except NonFiniteError:
        return float("nan")
    L = multiplication_matrix(kind)
    return float(np.max(np.abs(J @ L - L @ J)))


if __name__ == "__main__":
    print(f"z² at 1+ε: {paraholomorphy_residual(lambda w: w * w, Paracomplex.from_xy(1, 1)):.2e}")
    print(f"conj at 1: {paraholomorphy_residual(lambda w: w.conj(), Paracomplex.real(1)):.2e}")
    plus, minus = k_split(KStructure(np.array([[0.0, 1.0], [1.0, 0.0]])), [1.0, 0.0])
    print(f"swap split of (1, 0): {plus}, {minus}")
