"""Test reduced rational functions."""

from __future__ import annotations

import pytest
from sympy import Rational

from painleve_galois.common.exceptions import DomainError
from painleve_galois.common.polynomial import Polynomial
from painleve_galois.common.rational_function import RationalFunction, derivative


class TestCanonicalForm:
    """Test the canonical form established at construction."""

    def test_common_factors_cancel(self: TestCanonicalForm, zp: Polynomial) -> None:
        """Numerator and denominator are coprime after construction."""
        f = RationalFunction(zp**2 - 1, 2 * zp - 2)
        assert f.numerator == (zp + 1) * Rational(1, 2)
        assert f.denominator.is_one

    def test_denominator_is_monic(self: TestCanonicalForm, zp: Polynomial) -> None:
        """The leading coefficient moves to the numerator."""
        f = RationalFunction(Polynomial.constant(3), 3 * zp + 6)
        assert f.denominator == zp + 2
        assert f.numerator == Polynomial.constant(1)

    def test_zero_denominator(self: TestCanonicalForm, zp: Polynomial) -> None:
        """A zero denominator is a domain error."""
        with pytest.raises(DomainError):
            RationalFunction(zp, Polynomial.constant(0))

    def test_zero_has_unit_denominator(self: TestCanonicalForm, zp: Polynomial) -> None:
        """Every representation of zero is the same record."""
        assert RationalFunction(Polynomial.constant(0), zp) == RationalFunction.constant(0)


class TestArithmetic:
    """Test field operations."""

    def test_mixed_operands(self: TestArithmetic, z: RationalFunction) -> None:
        """Integers, rationals and polynomials mix with rational functions."""
        assert 1 + z - 1 == z
        assert (2 * z) * Rational(1, 2) == z
        assert str(6 / z**2 + z) == "(z^3 + 6)/z^2"

    def test_negative_power(self: TestArithmetic, z: RationalFunction) -> None:
        """Negative powers invert."""
        assert z**-2 == 1 / z**2
        assert (z + 1) ** 0 == 1

    def test_division_by_zero(self: TestArithmetic, z: RationalFunction) -> None:
        """Dividing by the zero function is a domain error."""
        with pytest.raises(DomainError):
            _ = z / RationalFunction.constant(0)

    def test_constant_value(self: TestArithmetic, z: RationalFunction) -> None:
        """Constants expose their value; other functions refuse."""
        assert ((z + 1) / (z + 1) * 5).constant_value() == 5
        with pytest.raises(DomainError):
            z.constant_value()


class TestCalculus:
    """Test derivatives, evaluation and behaviour at infinity."""

    def test_quotient_rule(self: TestCalculus, z: RationalFunction) -> None:
        """The derivative of `1/(z^2 + 1)` is `-2z/(z^2 + 1)^2`."""
        assert (1 / (z**2 + 1)).derivative() == -2 * z / (z**2 + 1) ** 2

    def test_derivative_dispatch(self: TestCalculus, z: RationalFunction, zp: Polynomial) -> None:
        """The module-level derivative accepts both kinds of operands."""
        assert derivative(zp**3) == 3 * zp**2
        assert derivative(1 / z) == -1 / z**2

    def test_evaluate(self: TestCalculus, z: RationalFunction) -> None:
        """Evaluation is exact and refuses poles."""
        f = (z**3 + 6) / z**2
        assert f.evaluate(2) == Rational(14, 4)
        with pytest.raises(DomainError):
            f.evaluate(0)

    def test_order_at_infinity(self: TestCalculus, z: RationalFunction) -> None:
        """The order at infinity is the degree of the denominator minus that of the numerator."""
        assert ((z**3 + 6) / z**2).order_at_infinity() == -1
        assert (2 / z**2).order_at_infinity() == 2

    def test_coefficient_at_infinity(self: TestCalculus, z: RationalFunction) -> None:
        """The limit of `z^2 f` is finite only when `f` decays fast enough."""
        assert ((3 * z + 1) / (z**3 + z)).coefficient_at_infinity(2) == 3
        assert (1 / z**3).coefficient_at_infinity(2) == 0
        with pytest.raises(DomainError):
            z.coefficient_at_infinity(2)
