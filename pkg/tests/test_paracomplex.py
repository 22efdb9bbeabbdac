"""Paracomplex scalars: arithmetic, conjugation, inversion, parsing."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.algebra.paracomplex import (
    E_MINUS,
    E_PLUS,
    EPSILON,
    ONE,
    ZERO,
    AlgebraKind,
    Paracomplex,
    algebra_kind,
    from_idempotent,
    pc_conj,
    pc_inv,
    pc_mul,
    structure_constants,
    to_idempotent,
)
from src.errors import ParseError, ZeroDivisorError

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=50)
paracomplex = st.builds(Paracomplex, fractions, fractions)


class TestArithmetic:
    def test_zero_divisors_annihilate(self):
        assert pc_mul(Paracomplex.from_xy(1, 1), Paracomplex.from_xy(1, -1)) == ZERO

    def test_idempotents(self):
        assert E_PLUS * E_MINUS == ZERO
        assert E_PLUS * E_PLUS == E_PLUS
        assert E_MINUS * E_MINUS == E_MINUS
        assert E_PLUS + E_MINUS == ONE

    def test_product_matches_structure_constants(self):
        product = pc_mul(Paracomplex.from_xy(2, 1), Paracomplex.from_xy(3, 2))
        assert (product.x, product.y) == (8, 7)

    def test_epsilon_squares_to_one(self):
        assert EPSILON * EPSILON == ONE

    def test_real_coercion(self):
        assert Paracomplex.from_xy(2, 1) * 3 == Paracomplex.from_xy(6, 3)
        assert 1 - EPSILON == Paracomplex.from_xy(1, -1)


class TestConjugation:
    def test_conj(self):
        assert pc_conj(Paracomplex.from_xy(3, 1)) == Paracomplex.from_xy(3, -1)

    def test_norm(self):
        z = Paracomplex.from_xy(2, 1)
        product = z * pc_conj(z)
        assert product.y == 0
        assert product.x == 3
        assert z.norm_squared() == 3

    @given(paracomplex)
    def test_involution(self, z):
        assert pc_conj(pc_conj(z)) == z

    @given(paracomplex, paracomplex)
    def test_conj_is_multiplicative(self, a, b):
        assert pc_conj(a * b) == pc_conj(a) * pc_conj(b)


class TestInverse:
    def test_inverse_of_two_plus_eps(self):
        inverse = pc_inv(Paracomplex.from_xy(2, 1))
        assert inverse.x == pytest.approx(2 / 3)
        assert inverse.y == pytest.approx(-1 / 3)

    def test_inverse_of_one(self):
        assert pc_inv(ONE) == ONE

    def test_zero_divisor_raises(self):
        with pytest.raises(ZeroDivisorError):
            pc_inv(Paracomplex.from_xy(1, 1))

    def test_relative_tolerance(self):
        z = Paracomplex(1e6, 1e-9)
        assert z.is_zero_divisor()
        with pytest.raises(ZeroDivisorError):
            z.inverse()

    def test_exact_inverse_stays_exact(self):
        inverse = Paracomplex(Fraction(3), Fraction(-2)).inverse()
        assert inverse == Paracomplex(Fraction(1, 3), Fraction(-1, 2))

    @given(paracomplex)
    def test_dichotomy(self, z):
        if z.plus != 0 and z.minus != 0:
            assert z * z.inverse() == ONE
        else:
            with pytest.raises(ZeroDivisorError):
                z.inverse()


@given(paracomplex, paracomplex, paracomplex)
def test_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


class TestCoordinates:
    @pytest.mark.parametrize(
        "xy, expected",
        [((3, 1), (4, 2)), ((1, 0), (1, 1)), ((0, 1), (1, -1))],
    )
    def test_to_idempotent(self, xy, expected):
        assert to_idempotent(*xy) == expected

    @given(fractions, fractions)
    def test_from_idempotent_inverts(self, x, y):
        assert from_idempotent(*to_idempotent(x, y)) == (x, y)


class TestParsing:
    @pytest.mark.parametrize(
        "text, xy",
        [
            ("1+2ε", (1, 2)),
            ("3-ε", (3, -1)),
            ("ε", (0, 1)),
            ("-2.5", (-2.5, 0)),
            ("1/2+3/4eps", (0.5, 0.75)),
            ("(4|2)", (3, 1)),
        ],
    )
    def test_parse(self, text, xy):
        z = Paracomplex.parse(text)
        assert (float(z.x), float(z.y)) == pytest.approx(xy)

    def test_round_trip(self):
        z = Paracomplex.from_xy(2.5, -1.25)
        assert Paracomplex.parse(str(z)) == z
        assert Paracomplex.parse(z.idempotent_str()) == z

    @pytest.mark.parametrize("text", ["", "abc", "1+xε", "(1|)"])
    def test_parse_error(self, text):
        with pytest.raises(ParseError):
            Paracomplex.parse(text)


class TestAlgebraKinds:
    def test_classification(self):
        assert algebra_kind(1) is AlgebraKind.PARACOMPLEX
        assert algebra_kind(-1) is AlgebraKind.COMPLEX
        assert algebra_kind(0) is AlgebraKind.DUAL

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            algebra_kind(2)

    @pytest.mark.parametrize("kind", list(AlgebraKind))
    def test_epsilon_square(self, kind):
        C = structure_constants(kind)
        assert C[0, 1, 1] == kind.value
        np.testing.assert_array_equal(C[:, 0, :], np.eye(2))
