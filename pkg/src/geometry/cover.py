"""
Round-sphere side of the product structure ℝ𝒫ⁿ × ℝ𝒫ⁿ.

Sⁿ → ℝ𝒫ⁿ is the orientable 2-fold cover with the antipodal deck map.
Geodesics of the product are pairs of great-circle flows.
"""

from typing import Optional, Tuple

import numpy as np

from src.config import Config
from src.errors import GeometryError, NotTangentError, NotUnitError
from src.geometry.projective import RealProjectivePair, unit_representative

TangentPair = Tuple[np.ndarray, np.ndarray]


def _check_unit(q: np.ndarray, tol: Optional[float] = None) -> None:
    tol = Config.UNIT_TOL if tol is None else tol
    norm = float(np.linalg.norm(q))
    if abs(norm - 1.0) > tol:
        raise NotUnitError(f"‖q‖ = {norm!r}, expected 1")


def double_cover(q) -> Tuple[np.ndarray, np.ndarray]:
    """
    Project q ∈ Sⁿ to ℝ𝒫ⁿ.

    Returns the canonical unit representative of [q] (first nonzero entry
    positive) and the deck image -q.
    """
    q = np.asarray(q, dtype=float)
    _check_unit(q)
    return unit_representative(q), -q


def cover_fiber(point) -> Tuple[np.ndarray, np.ndarray]:
    """The two sphere points over a real projective point."""
    point = np.asarray(point, dtype=float)
    if not np.any(point):
        raise GeometryError("the zero vector is not a projective point")
    q = unit_representative(point)
    return q, -q


def sphere_distance(q1, q2) -> float:
    """Great-circle angle between unit vectors."""
    q1 = np.asarray(q1, dtype=float)
    q2 = np.asarray(q2, dtype=float)
    _check_unit(q1)
    _check_unit(q2)
    return float(np.arccos(np.clip(q1 @ q2, -1.0, 1.0)))


def rp_distance(a, b) -> float:
    """Quotient distance on ℝ𝒫ⁿ, min(θ, π - θ) for any representatives."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    cosine = abs(a @ b) / (np.linalg.norm(a) * np.linalg.norm(b))
    return float(np.arccos(min(1.0, cosine)))


def _great_circle(q: np.ndarray, v: np.ndarray, t: float) -> np.ndarray:
    speed = float(np.linalg.norm(v))
    if speed == 0.0:
        return q.copy()
    return q * np.cos(speed * t) + (v / speed) * np.sin(speed * t)


def geodesic_rpn_product(pair0: RealProjectivePair, direction: TangentPair, t: float) -> RealProjectivePair:
    """
    Product geodesic qᵢ(t) = qᵢcos(‖vᵢ‖t) + (vᵢ/‖vᵢ‖)sin(‖vᵢ‖t) on each factor.

    Representatives of pair0 must be unit vectors and each vᵢ orthogonal to
    its qᵢ.
    """
    points = (pair0.left, pair0.right)
    flowed = []
    for q, v in zip(points, direction):
        v = np.asarray(v, dtype=float)
        if v.shape != q.shape:
            raise NotTangentError(f"direction of shape {v.shape} at a point of shape {q.shape}")
        _check_unit(q)
        if abs(float(q @ v)) > Config.TANGENT_TOL * (1.0 + float(np.linalg.norm(v))):
            raise NotTangentError(f"⟨q, v⟩ = {float(q @ v):.3e} is not zero")
        flowed.append(_great_circle(q, v, t))
    return RealProjectivePair(flowed[0], flowed[1]).unit()


def orientable(n: int) -> bool:
    """ℝ𝒫ⁿ × ℝ𝒫ⁿ is orientable iff ℝ𝒫ⁿ is, i.e. iff n is odd."""
    if n < 1:
        raise GeometryError(f"dimension must be at least 1, got {n}")
    return n % 2 == 1


if __name__ == "__main__":
    start = RealProjectivePair([1.0, 0.0], [1.0, 0.0])
    end = geodesic_rpn_product(start, (np.array([0.0, 1.0]), np.zeros(2)), np.pi / 2)
    print(f"[1:0] toward [0:1] at t=π/2: {end.left}")
    print(f"orientable: {[n for n in range(1, 9) if orientable(n)]}")
