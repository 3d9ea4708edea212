"""Test the expression parser and the canonical printer."""

from __future__ import annotations

import random

import pytest
from sympy import Rational

from painleve_galois.common.exceptions import DomainError, ExpressionSyntaxError
from painleve_galois.common.expression import (
    Difference,
    IntegerLiteral,
    Negation,
    Power,
    Product,
    Quotient,
    Sum,
    Variable,
    format_rational,
    parse_expression,
    parse_rational_expression,
)
from painleve_galois.common.polynomial import Polynomial
from painleve_galois.common.rational_function import RationalFunction


class TestParser:
    """Test precedence, associativity and errors."""

    def test_power_binds_tighter_than_minus(self: TestParser) -> None:
        """`-z^2` negates the square."""
        assert parse_expression("-z^2") == Negation(Power(Variable(), 2))

    def test_left_associativity(self: TestParser) -> None:
        """Subtraction and division group to the left."""
        assert parse_expression("1 - 2 - 3") == Difference(
            Difference(IntegerLiteral(1), IntegerLiteral(2)), IntegerLiteral(3)
        )
        assert parse_expression("z / 2 / 3") == Quotient(
            Quotient(Variable(), IntegerLiteral(2)), IntegerLiteral(3)
        )

    def test_product_binds_tighter_than_sum(self: TestParser) -> None:
        """`1 + 2*z` is a sum whose right operand is a product."""
        assert parse_expression("1 + 2*z") == Sum(
            IntegerLiteral(1), Product(IntegerLiteral(2), Variable())
        )

    def test_potential_of_first_solution(self: TestParser, z: RationalFunction) -> None:
        """The potential along `w(z, 1)` parses to its canonical form."""
        r = parse_rational_expression("6/z^2 + z")
        assert r == (z**3 + 6) / z**2
        assert format_rational(r) == "(z^3 + 6)/z^2"

    def test_second_solution(self: TestParser) -> None:
        """`1/z - 3z^2/(z^3 + 4)` is reduced to a single fraction."""
        w = parse_rational_expression("1/z - 3*z^2/(z^3 + 4)")
        assert format_rational(w) == "(-2*z^3 + 4)/(z^4 + 4*z)"

    def test_decimal_literal(self: TestParser, z: RationalFunction) -> None:
        """Decimal literals are exact."""
        assert parse_rational_expression("0.25*z + 1.5") == z / 4 + Rational(3, 2)

    def test_zero_denominator(self: TestParser) -> None:
        """Dividing by an expression that vanishes identically is a domain error."""
        with pytest.raises(DomainError):
            parse_rational_expression("z/(z - z)")

    @pytest.mark.parametrize(
        "text",
        ["", "z +", "(z", "z)", "2 $ z", "z^-1", "z^z", "zz"],
    )
    def test_syntax_errors(self: TestParser, text: str) -> None:
        """Malformed input raises a syntax error with a position."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_rational_expression(text)
        assert 0 <= excinfo.value.position <= len(text)

    def test_trailing_parenthesis_position(self: TestParser) -> None:
        """The position points at the first character that cannot be consumed."""
        with pytest.raises(ExpressionSyntaxError) as excinfo:
            parse_expression("z)")
        assert excinfo.value.position == 1


class TestFormatter:
    """Test the canonical printer."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [
            (RationalFunction.constant(0), "0"),
            (-1 / RationalFunction.identity(), "-1/z"),
            (RationalFunction.identity() ** 2 / 2, "z^2/2"),
            (1 / (2 * RationalFunction.identity() + 1), "1/(2*z + 1)"),
            (RationalFunction.constant(Rational(-3, 4)), "-3/4"),
        ],
    )
    def test_known_forms(
        self: TestFormatter, value: RationalFunction, expected: str
    ) -> None:
        """Representative functions print as expected."""
        assert format_rational(value) == expected


def _random_polynomial(rng: random.Random, allow_zero: bool) -> Polynomial:
    while True:
        degree = rng.randint(0, 4)
        coefficients = [
            Rational(rng.randint(-9, 9), rng.choice([1, 1, 1, 2, 3, 5]))
            for _ in range(degree + 1)
        ]
        p = Polynomial.from_coefficients(coefficients)
        if allow_zero or not p.is_zero:
            return p


@pytest.mark.parametrize("seed", range(5))
def test_format_parse_round_trip(seed: int) -> None:
    """Parsing the printed form gives back the same reduced function."""
    rng = random.Random(seed)
    for _ in range(100):
        f = RationalFunction(
            _random_polynomial(rng, allow_zero=True),
            _random_polynomial(rng, allow_zero=False),
        )
        assert parse_rational_expression(format_rational(f)) == f
