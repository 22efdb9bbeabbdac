"""
Paracomplex projective space ℭ𝒫ⁿ.

A point is a PcVector of length n+1 up to multiplication by an invertible
paracomplex scalar. Such a scalar rescales the (+) and (-) sheets
independently, so a point is the same thing as a pair of real projective
points, one per sheet, as long as neither sheet vanishes.
"""

import os
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.algebra.linalg import PcMatrix, PcVector, hermitian_inner
from src.algebra.paracomplex import Paracomplex
from src.config import Config
from src.errors import (
    DegenerateCollineationError,
    DegenerateConfigurationError,
    DegenerateImageError,
    DimensionMismatchError,
    GeometryError,
    NotCollinearError,
    NullNormError,
    ParseError,
    SpecialPointError,
    ZeroVectorError,
)


def _scale(coords: PcVector) -> float:
    return float(max(np.max(np.abs(coords.plus)), np.max(np.abs(coords.minus))))


def _sheet_is_zero(sheet: np.ndarray, scale: float) -> bool:
    return float(np.max(np.abs(sheet))) <= Config.PROJECTIVE_TOL * scale


def _normalize_sheet(sheet: np.ndarray) -> np.ndarray:
    """Scale so the first nonzero entry is +1."""
    threshold = Config.PROJECTIVE_TOL * float(np.max(np.abs(sheet)))
    lead = int(np.argmax(np.abs(sheet) > threshold))
    return sheet / sheet[lead]


def _proportional(u: np.ndarray, v: np.ndarray, tol: float) -> bool:
    """u ∥ v via the largest 2×2 minor, relative to |u||v|."""
    minors = np.outer(u, v) - np.outer(v, u)
    return float(np.max(np.abs(minors))) <= tol * float(np.linalg.norm(u) * np.linalg.norm(v))


@dataclass(frozen=True, eq=False)
class ProjectivePoint:
    """
    Point of ℭ𝒫ⁿ in canonical normalization.

    Build instances with from_coords; the raw constructor trusts its input.
    Non-special points are scaled sheetwise so the first nonzero coordinate is
    +1. Special points (no invertible coordinate) keep their raw coordinates.
    """

    coords: PcVector
    special: bool = False

    @classmethod
    def from_coords(cls, coords: PcVector) -> "ProjectivePoint":
        scale = _scale(coords)
        if scale == 0.0:
            raise ZeroVectorError("homogeneous coordinates are all zero")
        tol = Config.PROJECTIVE_TOL * scale
        invertible = (np.abs(coords.plus) > tol) & (np.abs(coords.minus) > tol)
        if not np.any(invertible):
            return cls(coords, special=True)
        return cls(
            PcVector(_normalize_sheet(coords.plus), _normalize_sheet(coords.minus)),
            special=False,
        )

    @classmethod
    def from_components(cls, components: Sequence[Paracomplex]) -> "ProjectivePoint":
        return cls.from_coords(PcVector.from_components(components))

    @classmethod
    def from_xy(cls, pairs: Sequence[Sequence[float]]) -> "ProjectivePoint":
        return cls.from_coords(PcVector.from_xy(pairs))

    @classmethod
    def real(cls, values: Sequence[float]) -> "ProjectivePoint":
        return cls.from_coords(PcVector.real(values))

    @classmethod
    def from_json(cls, payload: Dict) -> "ProjectivePoint":
        try:
            return cls.from_xy(payload["coords"])
        except GeometryError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"invalid point JSON: {exc}") from exc

    def to_json(self) -> Dict[str, List[List[float]]]:
        return {"coords": [[x, y] for x, y in self.coords.to_xy()]}

    @property
    def n(self) -> int:
        """Projective dimension."""
        return len(self.coords) - 1

    def sheet_is_zero(self) -> Tuple[bool, bool]:
        scale = _scale(self.coords)
        return (
            _sheet_is_zero(self.coords.plus, scale),
            _sheet_is_zero(self.coords.minus, scale),
        )

    def __str__(self) -> str:
        return "[" + " : ".join(str(z) for z in self.coords.components()) + "]"


@dataclass(frozen=True, eq=False)
class RealProjectivePair:
    """One real homogeneous vector per idempotent sheet."""

    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        left = np.array(self.left, dtype=float)
        right = np.array(self.right, dtype=float)
        if left.ndim != 1 or left.shape != right.shape:
            raise DimensionMismatchError(f"factor shapes {left.shape} and {right.shape}")
        if not np.any(left) or not np.any(right):
            raise ZeroVectorError("a factor of the pair is the zero vector")
        left.setflags(write=False)
        right.setflags(write=False)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def unit(self) -> "RealProjectivePair":
        """Unit-length representatives with a positive first nonzero entry."""
        return RealProjectivePair(unit_representative(self.left), unit_representative(self.right))


def unit_representative(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    v = v / np.linalg.norm(v)
    lead = int(np.argmax(np.abs(v) > Config.PROJECTIVE_TOL))
    return v if v[lead] > 0 else -v


def split_pair(p: ProjectivePoint) -> RealProjectivePair:
    """[Xⁱ] = [xⁱe₊ + yⁱe₋] ↦ ([x], [y])."""
    plus_zero, minus_zero = p.sheet_is_zero()
    if plus_zero or minus_zero:
        raise SpecialPointError(f"{p} has a vanishing sheet")
    return RealProjectivePair(_normalize_sheet(p.coords.plus), _normalize_sheet(p.coords.minus))


def join_pair(pair: RealProjectivePair) -> ProjectivePoint:
    return ProjectivePoint.from_coords(PcVector(pair.left, pair.right))


def same_real_point(u, v, tol: Optional[float] = None) -> bool:
    tol = Config.PROJECTIVE_TOL if tol is None else tol
    return _proportional(np.asarray(u, dtype=float), np.asarray(v, dtype=float), tol)


def same_point(p: ProjectivePoint, q: ProjectivePoint, tol: Optional[float] = None) -> bool:
    """Projective equality, tested sheet by sheet."""
    tol = Config.PROJECTIVE_TOL if tol is None else tol
    if p.n != q.n:
        return False
    if p.sheet_is_zero() != q.sheet_is_zero():
        return False
    return _proportional(p.coords.plus, q.coords.plus, tol) and _proportional(
        p.coords.minus, q.coords.minus, tol
    )


@dataclass(frozen=True, eq=False)
class Collineation:
    """x ↦ A·x, or A·conj(x) for an anti-collineation."""

    matrix: PcMatrix
    conjugating: bool = False

    def __post_init__(self):
        rows, cols = self.matrix.shape
        if rows != cols:
            raise DimensionMismatchError(f"collineation matrix must be square, got {self.matrix.shape}")
        for name, sheet in (("(+)", self.matrix.plus), ("(-)", self.matrix.minus)):
            if np.linalg.matrix_rank(sheet) < rows:
                raise DegenerateCollineationError(f"{name} sheet matrix is singular")

    @classmethod
    def identity(cls, size: int, conjugating: bool = False) -> "Collineation":
        return cls(PcMatrix.identity(size), conjugating)

    @classmethod
    def real(cls, matrix, conjugating: bool = False) -> "Collineation":
        return cls(PcMatrix.real(matrix), conjugating)


def apply_collineation(T: Collineation, p: ProjectivePoint) -> ProjectivePoint:
    if T.matrix.shape[1] != len(p.coords):
        raise DimensionMismatchError(f"{T.matrix.shape} collineation on a point of ℭ𝒫^{p.n}")
    source = p.coords.conj() if T.conjugating else p.coords
    image = T.matrix @ source
    scale = max(_scale(image), _scale(source))
    if _sheet_is_zero(image.plus, scale) or _sheet_is_zero(image.minus, scale):
        raise DegenerateImageError(f"image of {p} vanishes on a sheet")
    return ProjectivePoint.from_coords(image)


def compose(T2: Collineation, T1: Collineation) -> Collineation:
    """T2 ∘ T1; conj(A·x) = conj(A)·conj(x) carries the anti-linear case."""
    first = T1.matrix.conj() if T2.conjugating else T1.matrix
    return Collineation(T2.matrix @ first, T1.conjugating != T2.conjugating)


def is_unitary(T: Union[Collineation, PcMatrix], tol: Optional[float] = None) -> bool:
    """
    conj-transpose(A)·A = I on both sheets.

    Also accepts a bare PcMatrix, including ones rejected by Collineation.
    """
    tol = Config.UNIT_TOL if tol is None else tol
    matrix = T.matrix if isinstance(T, Collineation) else T
    gram = matrix.conj_transpose() @ matrix
    identity = np.eye(gram.plus.shape[0])
    defect = max(
        float(np.max(np.abs(gram.plus - identity))),
        float(np.max(np.abs(gram.minus - identity))),
    )
    return defect <= tol


def _norm_squared(p: ProjectivePoint) -> float:
    value = hermitian_inner(p.coords, p.coords).x
    scale = float(np.linalg.norm(p.coords.plus) * np.linalg.norm(p.coords.minus))
    if abs(value) <= Config.PROJECTIVE_TOL * scale:
        raise NullNormError(f"{p} lies on the absolute: {{x,x}} ≈ 0")
    return value


def hermitian_cos2(x: ProjectivePoint, y: ProjectivePoint) -> float:
    """{x,y}{y,x} / ({x,x}{y,y}), unclamped."""
    xx = _norm_squared(x)
    yy = _norm_squared(y)
    xy = hermitian_inner(x.coords, y.coords)
    return float(xy.norm_squared()) / (xx * yy)


def clamp_unit(value: float) -> float:
    return min(1.0, max(0.0, value))


def hermitian_distance(x: ProjectivePoint, y: ProjectivePoint, r: float = Config.DEFAULT_RADIUS) -> float:
    """ω with cos²(ω/r) = {x,y}{y,x} / ({x,x}{y,y})."""
    if x.n != y.n:
        raise DimensionMismatchError(f"points of ℭ𝒫^{x.n} and ℭ𝒫^{y.n}")
    return r * float(np.arccos(np.sqrt(clamp_unit(hermitian_cos2(x, y)))))


def _sheet_cross_ratio(vectors: Sequence[np.ndarray]) -> float:
    stack = np.vstack(vectors)
    _, singular, basis = np.linalg.svd(stack)
    scale = singular[0]
    if len(singular) > 2 and singular[2] > Config.PROJECTIVE_TOL * scale:
        raise NotCollinearError("points do not lie on one projective line")
    if singular[1] <= Config.PROJECTIVE_TOL * scale:
        raise DegenerateConfigurationError("points span no line on a sheet")
    a, b, c, d = (stack @ basis[:2].T)

    def det(u, v):
        return u[0] * v[1] - u[1] * v[0]

    numerator = det(a, c) * det(b, d)
    denominator = det(a, d) * det(b, c)
    norms = np.prod([np.linalg.norm(w) for w in (a, b, c, d)])
    if abs(denominator) <= Config.PROJECTIVE_TOL * norms:
        raise DegenerateConfigurationError("cross ratio denominator vanishes on a sheet")
    return float(numerator / denominator)


def cross_ratio(
    a: ProjectivePoint, b: ProjectivePoint, c: ProjectivePoint, d: ProjectivePoint
) -> Paracomplex:
    """
    (a, b; c, d) = ((t_a - t_c)(t_b - t_d)) / ((t_a - t_d)(t_b - t_c)), per sheet.

    With affine parameters (1, λ, ∞, 0) the result is λ.
    """
    points = (a, b, c, d)
    if len({p.n for p in points}) != 1:
        raise DimensionMismatchError("points live in different projective spaces")
    for p in points:
        if any(p.sheet_is_zero()):
            raise SpecialPointError(f"{p} has a vanishing sheet")
    plus = _sheet_cross_ratio([p.coords.plus for p in points])
    minus = _sheet_cross_ratio([p.coords.minus for p in points])
    return Paracomplex(plus, minus)


def pierce_mirror(p: ProjectivePoint, split_index: int) -> ProjectivePoint:
    """(a, b) ↦ (a, -b): negate the coordinates after split_index."""
    if not 0 <= split_index <= p.n:
        raise DimensionMismatchError(f"split index {split_index} outside [0, {p.n}]")
    signs = np.ones(p.n + 1)
    signs[split_index + 1 :] = -1.0
    mirrored = PcVector(p.coords.plus * signs, p.coords.minus * signs)
    return ProjectivePoint.from_coords(mirrored)


if __name__ == "__main__":
    p = ProjectivePoint.from_xy([[1, 0], [0, 1]])
    pair = split_pair(p)
    print(f"split [1 : ε] -> left {pair.left}, right {pair.right}")
    anti = apply_collineation(Collineation.identity(2, conjugating=True), p)
    print(f"anti-collineation: {p} -> {anti}")
    x = ProjectivePoint.real([1, 0])
    y = ProjectivePoint.real([1, 1])
    print(f"hermitian_distance([1:0], [1:1]) = {hermitian_distance(x, y):.12f} (π/4 = {np.pi / 4:.12f})")
