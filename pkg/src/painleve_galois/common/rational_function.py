"""Reduced rational functions in one variable over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union, overload

from sympy import Rational

from painleve_galois.common.exceptions import DomainError
from painleve_galois.common.formatting import format_rational_parts
from painleve_galois.common.polynomial import ONE, Polynomial, poly_gcd

if TYPE_CHECKING:
    from typing_extensions import Self

Operand = Union["RationalFunction", Polynomial, int, Rational]


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """Quotient of two coprime polynomials with a monic denominator.

    The canonical form is established at construction time, so two equal functions are
    structurally equal.

    Examples:
        >>> z = RationalFunction.identity()
        >>> print(6 / z**2 + z)
        (z^3 + 6)/z^2
        >>> (z**2 - 1) / (z - 1) == z + 1
        True
    """

    numerator: Polynomial
    denominator: Polynomial = ONE

    def __post_init__(self: RationalFunction) -> None:
        """Reduce to canonical form.

        Raises:
            DomainError: when the denominator is the zero polynomial
        """
        numerator, denominator = self.numerator, self.denominator
        if denominator.is_zero:
            raise DomainError("Rational function with zero denominator")
        if numerator.is_zero:
            object.__setattr__(self, "denominator", ONE)
            return
        if not denominator.is_constant:
            common = poly_gcd(numerator, denominator)
            if not common.is_one:
                numerator = numerator.divmod(common)[0]
                denominator = denominator.divmod(common)[0]
        lead = denominator.leading_coefficient
        if lead != 1:
            numerator = numerator * (1 / lead)
            denominator = denominator * (1 / lead)
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    @classmethod
    def from_polynomial(cls: type[Self], polynomial: Polynomial) -> Self:
        """Embed a polynomial.

        Args:
            polynomial (Polynomial): the polynomial

        Returns:
            Self: rational function with denominator 1
        """
        return cls(polynomial, ONE)

    @classmethod
    def constant(cls: type[Self], value: int | Rational) -> Self:
        """Constant rational function.

        Args:
            value (int | Rational): the constant

        Returns:
            Self: constant function
        """
        return cls(Polynomial.constant(value), ONE)

    @classmethod
    def identity(cls: type[Self]) -> Self:
        """The function `z`.

        Returns:
            Self: identity function
        """
        return cls(Polynomial.identity(), ONE)

    @property
    def is_zero(self: RationalFunction) -> bool:
        """Whether the function vanishes identically.

        Returns:
            bool: True for the zero function
        """
        return self.numerator.is_zero

    @property
    def is_polynomial(self: RationalFunction) -> bool:
        """Whether the denominator is 1.

        Returns:
            bool: True for polynomials
        """
        return self.denominator.is_one

    @property
    def is_constant(self: RationalFunction) -> bool:
        """Whether the function is a constant.

        Returns:
            bool: True for constants, zero included
        """
        return self.is_polynomial and self.numerator.is_constant

    def constant_value(self: RationalFunction) -> Rational:
        """Value of a constant function.

        Returns:
            Rational: the constant

        Raises:
            DomainError: when the function is not constant
        """
        if not self.is_constant:
            raise DomainError(f"{self} is not a constant")
        return self.numerator.leading_coefficient

    @staticmethod
    def _lift(other: Operand) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other, ONE)
        return RationalFunction(Polynomial.constant(other), ONE)

    def __add__(self: RationalFunction, other: Operand) -> RationalFunction:
        other = self._lift(other)
        if self.denominator == other.denominator:
            return RationalFunction(self.numerator + other.numerator, self.denominator)
        return RationalFunction(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self: RationalFunction) -> RationalFunction:
        return RationalFunction(-self.numerator, self.denominator)

    def __sub__(self: RationalFunction, other: Operand) -> RationalFunction:
        return self + (-self._lift(other))

    def __rsub__(self: RationalFunction, other: Operand) -> RationalFunction:
        return self._lift(other) + (-self)

    def __mul__(self: RationalFunction, other: Operand) -> RationalFunction:
        other = self._lift(other)
        return RationalFunction(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def reciprocal(self: RationalFunction) -> RationalFunction:
        """Multiplicative inverse.

        Returns:
            RationalFunction: `1/self`

        Raises:
            DomainError: for the zero function
        """
        if self.is_zero:
            raise DomainError("Division by the zero rational function")
        return RationalFunction(self.denominator, self.numerator)

    def __truediv__(self: RationalFunction, other: Operand) -> RationalFunction:
        return self * self._lift(other).reciprocal()

    def __rtruediv__(self: RationalFunction, other: Operand) -> RationalFunction:
        return self._lift(other) * self.reciprocal()

    def __pow__(self: RationalFunction, exponent: int) -> RationalFunction:
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RationalFunction(self.numerator**exponent, self.denominator**exponent)

    def __eq__(self: RationalFunction, other: object) -> bool:
        if isinstance(other, (Polynomial, int, Rational)):
            other = self._lift(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self: RationalFunction) -> int:
        return hash((self.numerator, self.denominator))

    def __str__(self: RationalFunction) -> str:
        return format_rational_parts(
            self.numerator.coefficients, self.denominator.coefficients
        )

    def __repr__(self: RationalFunction) -> str:
        return f"RationalFunction({self})"

    def derivative(self: RationalFunction) -> RationalFunction:
        """Derivative by the quotient rule.

        Returns:
            RationalFunction: reduced derivative

        Examples:
            >>> z = RationalFunction.identity()
            >>> print((-1 / z).derivative())
            1/z^2
        """
        if self.is_polynomial:
            return RationalFunction(self.numerator.derivative(), ONE)
        top, bottom = self.numerator, self.denominator
        return RationalFunction(
            top.derivative() * bottom - top * bottom.derivative(), bottom**2
        )

    def evaluate(self: RationalFunction, point: int | Rational) -> Rational:
        """Value at a rational point.

        Args:
            point (int | Rational): evaluation point

        Returns:
            Rational: exact value

        Raises:
            DomainError: when the point is a pole
        """
        bottom = self.denominator.evaluate(point)
        if bottom == 0:
            raise DomainError(f"{point} is a pole of {self}")
        return self.numerator.evaluate(point) / bottom

    def order_at_infinity(self: RationalFunction) -> int:
        """Degree of the denominator minus degree of the numerator.

        Returns:
            int: order of vanishing at infinity

        Raises:
            DomainError: for the zero function
        """
        if self.is_zero:
            raise DomainError("The zero function has no order at infinity")
        return self.denominator.degree - self.numerator.degree

    def coefficient_at_infinity(self: RationalFunction, order: int) -> Rational:
        """Limit of `z**order * self` as `z` tends to infinity.

        Args:
            order (int): power of `z` to multiply by

        Returns:
            Rational: the limit, zero when the function decays faster

        Raises:
            DomainError: when the limit is infinite

        Examples:
            >>> z = RationalFunction.identity()
            >>> (2 / z**2).coefficient_at_infinity(2)
            2
        """
        if self.is_zero:
            return Rational(0)
        excess = order - self.order_at_infinity()
        if excess > 0:
            raise DomainError(f"z^{order} * ({self}) is unbounded at infinity")
        if excess < 0:
            return Rational(0)
        return self.numerator.leading_coefficient


@overload
def derivative(f: Polynomial) -> Polynomial: ...


@overload
def derivative(f: RationalFunction) -> RationalFunction: ...


def derivative(f: Polynomial | RationalFunction) -> Polynomial | RationalFunction:
    """Formal derivative of a polynomial or a rational function.

    Args:
        f (Polynomial | RationalFunction): function to differentiate

    Returns:
        Polynomial | RationalFunction: derivative of the same kind
    """
    return f.derivative()
