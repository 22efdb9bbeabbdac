"""
Hermitian hyperquadrics x̄Qx + c = 0 and the cross-ratio distance they induce.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.algebra.linalg import PcMatrix, PcVector
from src.algebra.paracomplex import Paracomplex
from src.config import Config
from src.errors import (
    DimensionMismatchError,
    LineMissesQuadricError,
    NotHermitianError,
    NullNormError,
)
from src.geometry.projective import ProjectivePoint, clamp_unit, cross_ratio, same_point


@dataclass(frozen=True, eq=False)
class Hyperquadric:
    """Q = conj-transpose(Q), i.e. Q₊ = Q₋ᵀ sheetwise."""

    Q: PcMatrix
    c: float = 0.0

    def __post_init__(self):
        rows, cols = self.Q.shape
        if rows != cols:
            raise DimensionMismatchError(f"Q must be square, got {self.Q.shape}")
        scale = 1.0 + float(np.max(np.abs(self.Q.plus)))
        if np.max(np.abs(self.Q.plus - self.Q.minus.T)) > Config.SYMMETRY_TOL * scale:
            raise NotHermitianError("Q differs from its conjugate transpose")

    @classmethod
    def identity(cls, n: int, c: float = 0.0) -> "Hyperquadric":
        """Σ x̄ⁱxⁱ + c on ℭ𝒫ⁿ."""
        return cls(PcMatrix.identity(n + 1), c)

    def form(self, u: PcVector, v: PcVector) -> Paracomplex:
        """{u, v}_Q = conj(u)ᵀ Q v."""
        if len(u) != self.Q.shape[0] or len(v) != self.Q.shape[0]:
            raise DimensionMismatchError(f"vectors of length {len(u)}, {len(v)} for Q of {self.Q.shape}")
        return Paracomplex(
            float(u.minus @ self.Q.plus @ v.plus),
            float(u.plus @ self.Q.minus @ v.minus),
        )

    def contains(self, p: ProjectivePoint, tol: Optional[float] = None) -> bool:
        tol = Config.PROJECTIVE_TOL if tol is None else tol
        return abs(hyperquadric_eval(self, p)) <= tol


def hyperquadric_eval(Q: Hyperquadric, p: ProjectivePoint) -> float:
    """
    x̄Qx + c at the canonical normalization of p.

    Only the zero set is projectively invariant; the sign labels the two
    complementary domains.
    """
    return float(Q.form(p.coords, p.coords).x + Q.c)


def _null_check(Q: Hyperquadric, p: ProjectivePoint) -> Paracomplex:
    value = Q.form(p.coords, p.coords)
    scale = float(np.linalg.norm(p.coords.plus) * np.linalg.norm(p.coords.minus))
    scale *= 1.0 + float(np.max(np.abs(Q.Q.plus)))
    if abs(value.x) <= Config.PROJECTIVE_TOL * scale:
        raise NullNormError(f"{p} lies on the hyperquadric")
    return value


def polar_points(
    X: ProjectivePoint, Y: ProjectivePoint, Q: Hyperquadric
) -> Tuple[ProjectivePoint, ProjectivePoint]:
    """
    Meet the line XY with the polar hyperplanes of X and of Y.

    α = {X,Y}X - {X,X}Y satisfies {X, α} = 0 and β = {Y,Y}X - {Y,X}Y
    satisfies {Y, β} = 0. Both are computed sheetwise, so the pairing of the
    intersections is fixed by which endpoint each polar belongs to.
    """
    if X.n != Y.n:
        raise DimensionMismatchError(f"points of ℭ𝒫^{X.n} and ℭ𝒫^{Y.n}")
    for sheet in ("plus", "minus"):
        u = getattr(X.coords, sheet)
        v = getattr(Y.coords, sheet)
        minors = np.outer(u, v) - np.outer(v, u)
        if np.max(np.abs(minors)) <= Config.PROJECTIVE_TOL * np.linalg.norm(u) * np.linalg.norm(v):
            raise LineMissesQuadricError(f"X and Y coincide on the ({sheet}) sheet, so XY is undefined there")
    xx = _null_check(Q, X)
    yy = _null_check(Q, Y)
    xy = Q.form(X.coords, Y.coords)
    yx = Q.form(Y.coords, X.coords)
    alpha = X.coords.scale(xy) - Y.coords.scale(xx)
    beta = X.coords.scale(yy) - Y.coords.scale(yx)
    return ProjectivePoint.from_coords(alpha), ProjectivePoint.from_coords(beta)


@dataclass(frozen=True)
class QuadricDistance:
    """Cross-ratio distance with the raw cosine² and how far it was clamped."""

    value: float
    cos2: float
    clamped_by: float


def cross_ratio_distance_report(
    X: ProjectivePoint, Y: ProjectivePoint, Q: Hyperquadric, r: float = Config.DEFAULT_RADIUS
) -> QuadricDistance:
    """δ with cos²(δ/r) = (X, Y; β, α)."""
    if same_point(X, Y):
        _null_check(Q, X)
        return QuadricDistance(0.0, 1.0, 0.0)
    alpha, beta = polar_points(X, Y, Q)
    cos2 = cross_ratio(X, Y, beta, alpha).x
    clamped = clamp_unit(cos2)
    return QuadricDistance(
        value=r * float(np.arccos(np.sqrt(clamped))),
        cos2=float(cos2),
        clamped_by=float(abs(cos2 - clamped)),
    )


def cross_ratio_distance(
    X: ProjectivePoint, Y: ProjectivePoint, Q: Hyperquadric, r: float = Config.DEFAULT_RADIUS
) -> float:
    return cross_ratio_distance_report(X, Y, Q, r).value
