"""
Paracomplex (split-complex) scalars.

A paracomplex number z = x + εy with ε² = 1 is stored in idempotent
coordinates (z₊, z₋) = (x + y, x - y), i.e. z = z₊e₊ + z₋e₋ with
e± = (1 ± ε)/2. Multiplication, inversion and conjugation are componentwise
in this basis, so ring laws hold exactly for exact scalar types
(int, Fraction) and to machine precision for floats.
"""

import os
import re
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from numbers import Real
from typing import Tuple, Union

import numpy as np

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), "../.."))
from src.config import Config
from src.errors import ParseError, ZeroDivisorError

Scalar = Union[int, float, Fraction]

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?"
_EPS_FORM = re.compile(
    rf"^(?P<real>.*?)(?P<sign>[+-])?\s*(?P<coef>{_NUM})?\s*(?:ε|eps)$"
)
_IDEMPOTENT_FORM = re.compile(r"^\((?P<plus>[^|]+)\|(?P<minus>[^|]+)\)$")


def _to_number(text: str) -> Scalar:
    text = text.strip().replace(" ", "")
    if not text:
        raise ParseError("empty number")
    try:
        if "/" in text:
            return Fraction(text)
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a real number: {text!r}") from exc


def _fmt(value: Scalar) -> str:
    if isinstance(value, float):
        return str(int(value)) if value.is_integer() and abs(value) < 1e15 else repr(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


@dataclass(frozen=True)
class Paracomplex:
    """Element z₊e₊ + z₋e₋ of the paracomplex algebra."""

    plus: Scalar
    minus: Scalar

    @classmethod
    def from_xy(cls, x: Scalar, y: Scalar = 0) -> "Paracomplex":
        return cls(x + y, x - y)

    @classmethod
    def real(cls, value: Scalar) -> "Paracomplex":
        return cls(value, value)

    @property
    def x(self) -> Scalar:
        return (self.plus + self.minus) / 2

    @property
    def y(self) -> Scalar:
        return (self.plus - self.minus) / 2

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Paracomplex(self.plus + other.plus, self.minus + other.minus)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Paracomplex(self.plus - other.plus, self.minus - other.minus)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Paracomplex(self.plus * other.plus, self.minus * other.minus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __neg__(self):
        return Paracomplex(-self.plus, -self.minus)

    def conj(self) -> "Paracomplex":
        """x + εy ↦ x - εy, which swaps the idempotent coordinates."""
        return Paracomplex(self.minus, self.plus)

    def norm_squared(self) -> Scalar:
        """z·conj(z) = x² - y² = z₊z₋ (real, possibly negative)."""
        return self.plus * self.minus

    def _threshold(self) -> float:
        return Config.ZERO_DIVISOR_RTOL * (1 + abs(self.plus) + abs(self.minus))

    def is_zero(self) -> bool:
        return self.plus == 0 and self.minus == 0

    def is_zero_divisor(self) -> bool:
        """Exactly one idempotent coordinate vanishes (relative tolerance)."""
        threshold = self._threshold()
        plus_small = abs(self.plus) <= threshold
        minus_small = abs(self.minus) <= threshold
        return plus_small != minus_small

    def is_invertible(self) -> bool:
        threshold = self._threshold()
        return abs(self.plus) > threshold and abs(self.minus) > threshold

    def inverse(self) -> "Paracomplex":
        if not self.is_invertible():
            raise ZeroDivisorError(f"{self} lies on the non-division locus")
        exact = all(isinstance(c, (int, Fraction)) for c in (self.plus, self.minus))
        one = Fraction(1) if exact else 1.0
        return Paracomplex(one / self.plus, one / self.minus)

    def to_tuple(self) -> Tuple[Scalar, Scalar]:
        return (self.x, self.y)

    def __str__(self) -> str:
        x, y = self.x, self.y
        sign = "-" if y < 0 else "+"
        return f"{_fmt(x)}{sign}{_fmt(abs(y))}ε"

    def idempotent_str(self) -> str:
        return f"({_fmt(self.plus)}|{_fmt(self.minus)})"

    @classmethod
    def parse(cls, text: str) -> "Paracomplex":
        """Parse "x+yε", "yε", "x" or the idempotent form "(z₊|z₋)"."""
        text = text.strip()
        match = _IDEMPOTENT_FORM.match(text)
        if match:
            return cls(_to_number(match["plus"]), _to_number(match["minus"]))

        match = _EPS_FORM.match(text.replace(" ", ""))
        if match is None:
            return cls.real(_to_number(text))

        real_text = match["real"]
        x = _to_number(real_text) if real_text else 0.0
        y = _to_number(match["coef"]) if match["coef"] else 1.0
        if match["sign"] == "-":
            y = -y
        return cls.from_xy(x, y)


def _coerce(value):
    if isinstance(value, Paracomplex):
        return value
    if isinstance(value, (Real, np.floating, np.integer)):
        return Paracomplex.real(value)
    return None


ONE = Paracomplex(1, 1)
ZERO = Paracomplex(0, 0)
EPSILON = Paracomplex(1, -1)  # ε = e₊ - e₋
E_PLUS = Paracomplex(1, 0)
E_MINUS = Paracomplex(0, 1)


def pc_mul(a: Paracomplex, b: Paracomplex) -> Paracomplex:
    return a * b


def pc_conj(z: Paracomplex) -> Paracomplex:
    return z.conj()


def pc_inv(z: Paracomplex) -> Paracomplex:
    """Componentwise inverse (1/z₊, 1/z₋); raises ZeroDivisorError off the unit group."""
    return z.inverse()


def to_idempotent(x: Scalar, y: Scalar) -> Tuple[Scalar, Scalar]:
    return (x + y, x - y)


def from_idempotent(z_plus: Scalar, z_minus: Scalar) -> Tuple[Scalar, Scalar]:
    """Adapted coordinates (z₊, z₋) to the paraholomorphic view (x, y)."""
    return ((z_plus + z_minus) / 2, (z_plus - z_minus) / 2)


class AlgebraKind(Enum):
    """Rank-2 unital algebras generated by {1, ε}."""

    PARACOMPLEX = 1
    COMPLEX = -1
    DUAL = 0


def algebra_kind(eps_square: float) -> AlgebraKind:
    for kind in AlgebraKind:
        if eps_square == kind.value:
            return kind
    raise ValueError(f"ε² = {eps_square} is not a normalized rank-2 algebra")


def structure_constants(kind: AlgebraKind = AlgebraKind.PARACOMPLEX) -> np.ndarray:
    """
    Structure constants C[k, i, j] with e_i e_j = Σ_k C[k, i, j] e_k in the
    basis (e_0, e_1) = (1, ε).
    """
    C = np.zeros((2, 2, 2))
    C[0, 0, 0] = 1.0  # 1·1 = 1
    C[1, 0, 1] = 1.0  # 1·ε = ε
    C[1, 1, 0] = 1.0
    C[0, 1, 1] = float(kind.value)  # ε·ε = ε²
    return C


if __name__ == "__main__":
    a = Paracomplex.from_xy(2, 1)
    b = Paracomplex.from_xy(3, 2)
    print(f"({a})·({b}) = {a * b}")
    assert (a * b).to_tuple() == (8, 7)
    assert (E_PLUS * E_MINUS).is_zero()
    print(f"inv({a}) = {pc_inv(a)}")
    print("Paracomplex self-check passed")
