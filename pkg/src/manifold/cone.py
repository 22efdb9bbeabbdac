"""
Finite measure spaces and the cone of strictly positive measures.

The automorphisms of the cone are the density rescalings dν/dμ = exp h. The
group acts simply transitively, and its one-parameter subgroups
f(s) = f(0)·exp(s·h) are the cone geodesics.
"""

import os
import sys
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.errors import DimensionMismatchError, GeometryError, NonFiniteError, NotInConeError


@dataclass(frozen=True)
class SampleSpace:
    """Atoms of a finite σ-algebra that lie outside the ideal."""

    atoms: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.atoms < 2:
            raise GeometryError(f"a sample space needs at least 2 atoms, got {self.atoms}")
        if self.labels is not None and len(self.labels) != self.atoms:
            raise DimensionMismatchError(f"{len(self.labels)} labels for {self.atoms} atoms")

    @classmethod
    def from_labels(cls, labels: Sequence[str], ideal: Iterable[str] = ()) -> "SampleSpace":
        """Drop atoms in the ideal; measures vanish there by definition."""
        ideal = set(ideal)
        kept = tuple(label for label in labels if label not in ideal)
        return cls(len(kept), kept)


def _finite_vector(values, name: str) -> np.ndarray:
    array = np.array(values, dtype=float)
    if array.ndim != 1:
        raise DimensionMismatchError(f"{name} must be a vector, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        raise NonFiniteError(f"{name} has non-finite entries")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Measure:
    weights: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "weights", _finite_vector(self.weights, "measure"))

    @property
    def atoms(self) -> int:
        return self.weights.shape[0]

    def in_cone(self) -> bool:
        return bool(np.all(self.weights > 0))

    def total(self) -> float:
        return float(np.sum(self.weights))


@dataclass(frozen=True, eq=False)
class Direction:
    """Covector h of a one-parameter automorphism subgroup."""

    h: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "h", _finite_vector(self.h, "direction"))

    @property
    def atoms(self) -> int:
        return self.h.shape[0]

    def __add__(self, other: "Direction") -> "Direction":
        return Direction(self.h + other.h)


def _require_cone(mu: Measure) -> None:
    if not mu.in_cone():
        raise NotInConeError(f"measure {mu.weights.tolist()} is not strictly positive")


def _require_same_atoms(a: int, b: int) -> None:
    if a != b:
        raise DimensionMismatchError(f"{a} atoms vs {b} atoms")


def cone_automorphism(mu: Measure, h: Direction) -> Measure:
    """ν with dν/dμ = exp h."""
    _require_cone(mu)
    _require_same_atoms(mu.atoms, h.atoms)
    return Measure(mu.weights * np.exp(h.h))


def automorphism_log(mu: Measure, nu: Measure) -> Direction:
    """h = ln dν/dμ."""
    _require_cone(mu)
    _require_cone(nu)
    _require_same_atoms(mu.atoms, nu.atoms)
    return Direction(np.log(nu.weights) - np.log(mu.weights))


def cone_geodesic(f0: Measure, h: Direction, s: float) -> Measure:
    _require_cone(f0)
    _require_same_atoms(f0.atoms, h.atoms)
    return Measure(f0.weights * np.exp(s * h.h))


def cone_is_homogeneous(mu: Measure, nu: Measure, rtol: float = 1e-12) -> bool:
    """The automorphism ln(ν/μ) carries μ onto ν."""
    image = cone_automorphism(mu, automorphism_log(mu, nu))
    return bool(np.allclose(image.weights, nu.weights, rtol=rtol, atol=0.0))
