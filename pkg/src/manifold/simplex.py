"""
The probability simplex: exponential-tilt geodesics, Bhattacharyya geometry
and the embedding into paracomplex projective space.
"""

import os
import sys
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional

import numpy as np
import pandas as pd
from scipy.special import logsumexp

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.config import Config
from src.errors import (
    DimensionMismatchError,
    InvalidDistributionError,
    NonFiniteError,
    NotInteriorError,
    ParseError,
)
from src.geometry.projective import ProjectivePoint
from src.manifold.cone import Direction


@dataclass(frozen=True, eq=False)
class ProbDist:
    """
    Point of the closed simplex; `interior` flags strict positivity.

    `log_p` keeps the log-weights alongside `p`. Points built from logs stay
    interior even when a mass underflows to 0.0 in `p`.
    """

    p: np.ndarray
    log_p: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        p = np.array(self.p, dtype=float)
        if p.ndim != 1 or p.shape[0] < 2:
            raise InvalidDistributionError(f"need a vector over at least 2 atoms, got shape {p.shape}")
        if not np.all(np.isfinite(p)):
            raise NonFiniteError("distribution has non-finite entries")
        if np.any(p < 0):
            raise InvalidDistributionError(f"negative mass in {p.tolist()}")
        total = float(np.sum(p))
        if abs(total - 1.0) > Config.SIMPLEX_SUM_TOL * p.shape[0]:
            raise InvalidDistributionError(f"masses sum to {total!r}, not 1")
        if self.log_p is None:
            with np.errstate(divide="ignore"):
                log_p = np.log(p)
        else:
            log_p = np.array(self.log_p, dtype=float)
            if log_p.shape != p.shape:
                raise DimensionMismatchError(f"log-weights of shape {log_p.shape} for {p.shape[0]} atoms")
            if np.any(np.isnan(log_p)) or np.any(log_p > 0):
                raise InvalidDistributionError("log-weights must be ≤ 0 and not NaN")
        p.setflags(write=False)
        log_p.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "log_p", log_p)

    @property
    def atoms(self) -> int:
        return self.p.shape[0]

    @property
    def interior(self) -> bool:
        return bool(np.all(np.isfinite(self.log_p)))

    @classmethod
    def from_log(cls, log_p) -> "ProbDist":
        """Normalize log-weights by log-sum-exp and keep them."""
        log_p = np.asarray(log_p, dtype=float)
        if log_p.ndim != 1 or not np.all(np.isfinite(log_p)):
            raise NonFiniteError("log-weights must be a finite vector")
        log_p = np.minimum(log_p - logsumexp(log_p), 0.0)
        return cls(np.exp(log_p), log_p)

    @classmethod
    def uniform(cls, atoms: int) -> "ProbDist":
        return cls(np.full(atoms, 1.0 / atoms))

    @classmethod
    def from_json(cls, payload: Dict) -> "ProbDist":
        try:
            atoms = int(payload["atoms"])
            p = [float(v) for v in payload["p"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"invalid distribution JSON: {exc}") from exc
        if len(p) != atoms:
            raise ParseError(f"'atoms' is {atoms} but 'p' has {len(p)} entries")
        return cls(p)

    def to_json(self) -> Dict:
        return {"atoms": self.atoms, "p": self.p.tolist()}


def _require_interior(p: ProbDist) -> None:
    if not p.interior:
        raise NotInteriorError(f"{p.p.tolist()} lies on the boundary of the simplex")


def _require_same_atoms(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"{a} atoms vs {b} atoms")


def centered_direction(p0: ProbDist, q: Direction) -> Direction:
    """Representative of q mod constants with zero mean under p0."""
    _require_same_atoms(p0.atoms, q.atoms)
    return Direction(q.h - float(p0.p @ q.h))


def simplex_geodesic_log(p0: ProbDist, q: Direction, s: float) -> np.ndarray:
    """ln p(s) = ln p₀ + s·q - ln a(s), with ln a(s) by log-sum-exp."""
    _require_interior(p0)
    q = centered_direction(p0, q)
    tilted = p0.log_p + s * q.h
    return tilted - logsumexp(tilted)


def simplex_geodesic(p0: ProbDist, q: Direction, s: float) -> ProbDist:
    """
    p(s) = p₀·exp(s·q) / Σ p₀·exp(s·q).

    q and q + c·1 give the same path. s = 0 returns p₀ unchanged. The result
    carries its log-weights, so it stays interior for any finite s and can be
    fed back in to walk the path the other way.
    """
    if s == 0:
        _require_interior(p0)
        _require_same_atoms(p0.atoms, q.atoms)
        return p0
    return ProbDist.from_log(simplex_geodesic_log(p0, q, s))


def mixture_geodesic(p0: ProbDist, p1: ProbDist, s: float) -> ProbDist:
    """Straight line (1 - s)p₀ + s·p₁ in probability coordinates."""
    _require_same_atoms(p0.atoms, p1.atoms)
    return ProbDist((1.0 - s) * p0.p + s * p1.p)


def geodesic_trace(p0: ProbDist, q: Direction, s_values: Iterable[float]) -> pd.DataFrame:
    """One row per s with columns s, p_1, ..., p_n."""
    rows: List[List[float]] = []
    for s in s_values:
        rows.append([float(s)] + simplex_geodesic(p0, q, float(s)).p.tolist())
    columns = ["s"] + [f"p_{i}" for i in range(1, p0.atoms + 1)]
    return pd.DataFrame(rows, columns=columns)


def bhattacharyya_affinity(p: ProbDist, p_star: ProbDist) -> float:
    """BC = Σ √(pᵢ p*ᵢ)."""
    _require_same_atoms(p.atoms, p_star.atoms)
    return float(np.sum(np.sqrt(p.p * p_star.p)))


def fisher_rao_distance(p: ProbDist, p_star: ProbDist) -> float:
    """2·arccos(BC): great-circle distance between 2√p and 2√p*."""
    return 2.0 * float(np.arccos(np.clip(bhattacharyya_affinity(p, p_star), 0.0, 1.0)))


def hellinger_distance(p: ProbDist, p_star: ProbDist) -> float:
    return float(np.sqrt(max(0.0, 1.0 - bhattacharyya_affinity(p, p_star))))


def sphere_embedding(p: ProbDist) -> np.ndarray:
    """p ↦ 2√p on the radius-2 sphere."""
    return 2.0 * np.sqrt(p.p)


def natural_coordinates(p: ProbDist) -> np.ndarray:
    """θᵢ = ln pᵢ - ln pₙ for i < n."""
    _require_interior(p)
    logs = p.log_p
    return logs[:-1] - logs[-1]


def embed_projective(p: ProbDist) -> ProjectivePoint:
    """zᵢ = √pᵢ·e₊ + √pᵢ·e₋, the real diagonal embedding."""
    _require_interior(p)
    return ProjectivePoint.real(np.exp(0.5 * p.log_p))


if __name__ == "__main__":
    p0 = ProbDist([0.5, 0.5])
    p1 = simplex_geodesic(p0, Direction([1.0, 0.0]), 1.0)
    print(f"geodesic at s=1: {p1.p}  (e/(e+1) = {np.e / (np.e + 1):.5f})")
    print(f"BC((½,½), (0.9,0.1)) = {bhattacharyya_affinity(p0, ProbDist([0.9, 0.1])):.5f}")
    print(geodesic_trace(p0, Direction([1.0, -1.0]), np.linspace(0, 3, 4)))
