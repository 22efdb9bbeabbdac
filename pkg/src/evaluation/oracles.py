"""
Totally-geodesic containment oracle on ℝ𝒫ⁿ × ℝ𝒫ⁿ.

A fixed set describes itself by two operations: `sample`, which returns a
point of the set with a direction tangent to it, and `distance`, which
measures how far a point of the product has drifted from the set.
"""

from typing import Callable, Protocol, Tuple

import numpy as np

from src.config import Config
from src.geometry.cover import TangentPair, geodesic_rpn_product
from src.geometry.projective import RealProjectivePair

Flow = Callable[[RealProjectivePair, TangentPair, float], RealProjectivePair]


class FixedSet(Protocol):
    def sample(self, rng: np.random.Generator) -> Tuple[RealProjectivePair, TangentPair]:
        ...

    def distance(self, pair: RealProjectivePair) -> float:
        ...


def _tangent_in(q: np.ndarray, mask: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """Random vector supported on mask and orthogonal to q."""
    v = rng.standard_normal(q.shape) * mask
    return v - (v @ q) * q


class PierceFixedSet:
    """{b = 0}: coordinates after split_index vanish on both factors."""

    def __init__(self, n: int, split_index: int):
        self.n = n
        self.split_index = split_index
        self.mask = np.zeros(n + 1)
        self.mask[: split_index + 1] = 1.0

    def sample(self, rng: np.random.Generator) -> Tuple[RealProjectivePair, TangentPair]:
        factors = []
        directions = []
        for _ in range(2):
            q = rng.standard_normal(self.n + 1) * self.mask
            q /= np.linalg.norm(q)
            factors.append(q)
            directions.append(_tangent_in(q, self.mask, rng))
        return RealProjectivePair(*factors), (directions[0], directions[1])

    def distance(self, pair: RealProjectivePair) -> float:
        unit = pair.unit()
        outside = 1.0 - self.mask
        return float(max(np.linalg.norm(unit.left * outside), np.linalg.norm(unit.right * outside)))


class AffineHyperplaneSet:
    """
    {a·q = c} with c ≠ 0 on each unit-sphere factor.

    A small sphere rather than a great one, so great circles tangent to it
    leave it; used as a negative control.
    """

    def __init__(self, n: int, seed: int = Config.DEFAULT_SEED, offset: float = 0.5):
        rng = np.random.default_rng(seed)
        a = rng.standard_normal(n + 1)
        self.normal = a / np.linalg.norm(a)
        self.offset = offset
        self.n = n

    def _sample_factor(self, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
        a, c = self.normal, self.offset
        u = rng.standard_normal(self.n + 1)
        u -= (u @ a) * a
        u /= np.linalg.norm(u)
        q = c * a + np.sqrt(1.0 - c * c) * u
        v = rng.standard_normal(self.n + 1)
        v -= (v @ a) * a
        v -= (v @ u) * u
        return q, v

    def sample(self, rng: np.random.Generator) -> Tuple[RealProjectivePair, TangentPair]:
        (q1, v1), (q2, v2) = self._sample_factor(rng), self._sample_factor(rng)
        return RealProjectivePair(q1, q2), (v1, v2)

    def distance(self, pair: RealProjectivePair) -> float:
        # ±q are the same projective point
        deviations = []
        for q in (pair.left, pair.right):
            q = q / np.linalg.norm(q)
            deviations.append(abs(abs(q @ self.normal) - self.offset))
        return float(max(deviations))


def totally_geodesic_check(
    flow: Flow,
    fixed_set: FixedSet,
    samples: int,
    seed: int = Config.DEFAULT_SEED,
    points: int = Config.GEODESIC_SAMPLES,
) -> float:
    """
    Shoot geodesics from fixed-set points along fixed-set tangents and return
    the largest distance from the set over t ∈ [0, 1].
    """
    rng = np.random.default_rng(seed)
    ts = np.linspace(0.0, 1.0, points)
    deviation = 0.0
    for _ in range(samples):
        start, direction = fixed_set.sample(rng)
        for t in ts:
            deviation = max(deviation, fixed_set.distance(flow(start, direction, float(t))))
    return deviation


def pierce_containment(n: int, split_index: int, samples: int, seed: int) -> float:
    return totally_geodesic_check(geodesic_rpn_product, PierceFixedSet(n, split_index), samples, seed)
