"""
Vectors and matrices over the paracomplex algebra.

Both types carry one real array per idempotent sheet. Every linear operation
acts on the (+) and (-) sheets independently; conjugation swaps the sheets.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.algebra.paracomplex import Paracomplex
from src.errors import DimensionMismatchError


def _frozen(values, ndim: int) -> np.ndarray:
    array = np.array(values, dtype=float)
    if array.ndim != ndim:
        raise DimensionMismatchError(f"expected a {ndim}-d array, got shape {array.shape}")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class PcVector:
    """Paracomplex vector stored as a pair of real sheet vectors."""

    plus: np.ndarray
    minus: np.ndarray

    def __post_init__(self):
        plus = _frozen(self.plus, 1)
        minus = _frozen(self.minus, 1)
        if plus.shape != minus.shape:
            raise DimensionMismatchError(
                f"sheet lengths differ: {plus.shape} vs {minus.shape}"
            )
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    @classmethod
    def from_components(cls, components: Iterable[Paracomplex]) -> "PcVector":
        components = list(components)
        return cls([float(c.plus) for c in components], [float(c.minus) for c in components])

    @classmethod
    def from_xy(cls, pairs: Sequence[Sequence[float]]) -> "PcVector":
        """Build from (x, y) pairs, one per component z = x + εy."""
        xy = np.asarray(pairs, dtype=float).reshape(-1, 2)
        return cls(xy[:, 0] + xy[:, 1], xy[:, 0] - xy[:, 1])

    @classmethod
    def real(cls, values) -> "PcVector":
        return cls(values, values)

    def __len__(self) -> int:
        return self.plus.shape[0]

    def __getitem__(self, index: int) -> Paracomplex:
        return Paracomplex(float(self.plus[index]), float(self.minus[index]))

    def components(self) -> List[Paracomplex]:
        return [self[i] for i in range(len(self))]

    def to_xy(self) -> List[Tuple[float, float]]:
        x = (self.plus + self.minus) / 2
        y = (self.plus - self.minus) / 2
        return [(float(a), float(b)) for a, b in zip(x, y)]

    def conj(self) -> "PcVector":
        return PcVector(self.minus, self.plus)

    def scale(self, k: Paracomplex) -> "PcVector":
        return PcVector(k.plus * self.plus, k.minus * self.minus)

    def __add__(self, other: "PcVector") -> "PcVector":
        _check_same_length(self, other)
        return PcVector(self.plus + other.plus, self.minus + other.minus)

    def __sub__(self, other: "PcVector") -> "PcVector":
        _check_same_length(self, other)
        return PcVector(self.plus - other.plus, self.minus - other.minus)


@dataclass(frozen=True, eq=False)
class PcMatrix:
    """Paracomplex matrix stored as a pair of real sheet matrices."""

    plus: np.ndarray
    minus: np.ndarray

    def __post_init__(self):
        plus = _frozen(self.plus, 2)
        minus = _frozen(self.minus, 2)
        if plus.shape != minus.shape:
            raise DimensionMismatchError(
                f"sheet shapes differ: {plus.shape} vs {minus.shape}"
            )
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    @classmethod
    def identity(cls, size: int) -> "PcMatrix":
        return cls(np.eye(size), np.eye(size))

    @classmethod
    def real(cls, matrix) -> "PcMatrix":
        return cls(matrix, matrix)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Paracomplex]]) -> "PcMatrix":
        plus = [[float(z.plus) for z in row] for row in rows]
        minus = [[float(z.minus) for z in row] for row in rows]
        return cls(plus, minus)

    @classmethod
    def diagonal(cls, entries: Sequence[Paracomplex]) -> "PcMatrix":
        return cls(
            np.diag([float(z.plus) for z in entries]),
            np.diag([float(z.minus) for z in entries]),
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return self.plus.shape

    def __getitem__(self, index) -> Paracomplex:
        return Paracomplex(float(self.plus[index]), float(self.minus[index]))

    def conj(self) -> "PcMatrix":
        return PcMatrix(self.minus, self.plus)

    def transpose(self) -> "PcMatrix":
        return PcMatrix(self.plus.T, self.minus.T)

    def conj_transpose(self) -> "PcMatrix":
        return PcMatrix(self.minus.T, self.plus.T)

    def __matmul__(self, other):
        if isinstance(other, PcMatrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            return PcMatrix(self.plus @ other.plus, self.minus @ other.minus)
        if isinstance(other, PcVector):
            if self.shape[1] != len(other):
                raise DimensionMismatchError(f"cannot apply {self.shape} to length {len(other)}")
            return PcVector(self.plus @ other.plus, self.minus @ other.minus)
        return NotImplemented


def _check_same_length(u: PcVector, v: PcVector) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"vector lengths differ: {len(u)} vs {len(v)}")


def hermitian_inner(u: PcVector, v: PcVector) -> Paracomplex:
    """
    Hermitian form {u, v} = Σ conj(uⁱ) vⁱ.

    Sheetwise the (+) part is u₋·v₊ and the (-) part is u₊·v₋, so {u, u} is
    always real. The form is indefinite: zero-divisor directions such as
    (1, ε) have {u, u} = 0.
    """
    _check_same_length(u, v)
    return Paracomplex(float(u.minus @ v.plus), float(u.plus @ v.minus))
