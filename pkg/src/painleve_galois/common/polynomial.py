"""Dense univariate polynomials over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from sympy import QQ, Poly, Rational, Symbol

from painleve_galois.common.exceptions import DomainError, InexactDivisionError
from painleve_galois.common.formatting import format_rational_parts

if TYPE_CHECKING:
    from collections.abc import Iterable

    from typing_extensions import Self

Z = Symbol("z")

Coercible = Union["Polynomial", int, Rational]


@dataclass(frozen=True, eq=False)
class Polynomial:
    """Polynomial in `z` with exact rational coefficients.

    The sympy dense representation over `QQ` does the arithmetic; this wrapper pins the
    variable and the domain, exposes coefficients lowest degree first and never lets the
    degree of the zero polynomial leak into formulas.
    """

    poly: Poly

    @classmethod
    def from_coefficients(cls: type[Self], coefficients: Iterable[int | Rational]) -> Self:
        """Build a polynomial from coefficients indexed by degree.

        Args:
            coefficients (Iterable[int | Rational]): coefficients, lowest degree first

        Returns:
            Self: polynomial

        Examples:
            >>> print(Polynomial.from_coefficients([4, 0, 0, 1]))
            z^3 + 4
        """
        rep = [Rational(c) for c in coefficients][::-1] or [Rational(0)]
        return cls(Poly.from_list(rep, Z, domain=QQ))

    @classmethod
    def constant(cls: type[Self], value: int | Rational) -> Self:
        """Constant polynomial.

        Args:
            value (int | Rational): the constant

        Returns:
            Self: polynomial of degree 0, or the zero polynomial
        """
        return cls.from_coefficients([value])

    @classmethod
    def identity(cls: type[Self]) -> Self:
        """The polynomial `z`.

        Returns:
            Self: the identity polynomial
        """
        return cls.from_coefficients([0, 1])

    @property
    def coefficients(self: Polynomial) -> tuple[Rational, ...]:
        """Coefficients indexed by degree; empty for the zero polynomial.

        Returns:
            tuple[Rational, ...]: coefficients, lowest degree first
        """
        if self.poly.is_zero:
            return ()
        return tuple(self.poly.all_coeffs()[::-1])

    @property
    def is_zero(self: Polynomial) -> bool:
        """Whether this is the zero polynomial.

        Returns:
            bool: True for the zero polynomial
        """
        return bool(self.poly.is_zero)

    @property
    def is_one(self: Polynomial) -> bool:
        """Whether this is the constant one.

        Returns:
            bool: True for the constant polynomial 1
        """
        return bool(self.poly.is_one)

    @property
    def is_constant(self: Polynomial) -> bool:
        """Whether this polynomial has no positive-degree term (the zero polynomial included).

        Returns:
            bool: True when constant
        """
        return self.is_zero or self.poly.degree() == 0

    @property
    def degree(self: Polynomial) -> int:
        """Degree of a nonzero polynomial.

        Returns:
            int: the degree

        Raises:
            DomainError: for the zero polynomial, which has no degree
        """
        if self.is_zero:
            raise DomainError("The zero polynomial has no degree")
        return int(self.poly.degree())

    @property
    def leading_coefficient(self: Polynomial) -> Rational:
        """Leading coefficient, zero for the zero polynomial.

        Returns:
            Rational: leading coefficient
        """
        return Rational(self.poly.LC())

    @property
    def has_integer_coefficients(self: Polynomial) -> bool:
        """Whether every coefficient is an integer.

        Returns:
            bool: True when all coefficients are integers
        """
        return all(c.q == 1 for c in self.coefficients)

    def _coerce(self: Polynomial, other: Coercible) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other)

    def __add__(self: Polynomial, other: Coercible) -> Polynomial:
        return Polynomial(self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __sub__(self: Polynomial, other: Coercible) -> Polynomial:
        return Polynomial(self.poly - self._coerce(other).poly)

    def __rsub__(self: Polynomial, other: Coercible) -> Polynomial:
        return Polynomial(self._coerce(other).poly - self.poly)

    def __mul__(self: Polynomial, other: Coercible) -> Polynomial:
        if isinstance(other, Polynomial):
            return Polynomial(self.poly * other.poly)
        return Polynomial(self.poly.mul_ground(Rational(other)))

    __rmul__ = __mul__

    def __neg__(self: Polynomial) -> Polynomial:
        return Polynomial(-self.poly)

    def __pow__(self: Polynomial, exponent: int) -> Polynomial:
        if exponent < 0:
            raise DomainError(f"Negative power {exponent} of a polynomial")
        return Polynomial(self.poly**exponent)

    def __eq__(self: Polynomial, other: object) -> bool:
        if isinstance(other, (int, Rational)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self: Polynomial) -> int:
        return hash(self.coefficients)

    def __str__(self: Polynomial) -> str:
        return format_rational_parts(self.coefficients, (Rational(1),))

    def __repr__(self: Polynomial) -> str:
        return f"Polynomial({self})"

    def derivative(self: Polynomial) -> Polynomial:
        """Formal derivative.

        Returns:
            Polynomial: derivative with respect to `z`

        Examples:
            >>> print(Polynomial.from_coefficients([4, 0, 0, 1]).derivative())
            3*z^2
        """
        return Polynomial(self.poly.diff(Z))

    def antiderivative(self: Polynomial) -> Polynomial:
        """Antiderivative with zero constant term.

        Returns:
            Polynomial: antiderivative
        """
        return Polynomial(self.poly.integrate(Z))

    def monic(self: Polynomial) -> Polynomial:
        """Divide by the leading coefficient.

        Returns:
            Polynomial: monic associate

        Raises:
            DomainError: for the zero polynomial
        """
        if self.is_zero:
            raise DomainError("The zero polynomial has no monic associate")
        return Polynomial(self.poly.monic())

    def evaluate(self: Polynomial, point: int | Rational) -> Rational:
        """Value at a rational point.

        Args:
            point (int | Rational): evaluation point

        Returns:
            Rational: exact value
        """
        return Rational(self.poly.eval(Rational(point)))

    def divmod(self: Polynomial, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Euclidean division.

        Args:
            other (Polynomial): nonzero divisor

        Returns:
            tuple[Polynomial, Polynomial]: quotient and remainder

        Raises:
            DomainError: when dividing by the zero polynomial
        """
        if other.is_zero:
            raise DomainError("Division by the zero polynomial")
        quotient, remainder = self.poly.div(other.poly)
        return Polynomial(quotient), Polynomial(remainder)

    def __mod__(self: Polynomial, other: Polynomial) -> Polynomial:
        return self.divmod(other)[1]

    def is_squarefree(self: Polynomial) -> bool:
        """Whether the polynomial is coprime with its derivative.

        Returns:
            bool: True for a nonzero squarefree polynomial
        """
        if self.is_zero:
            return False
        return poly_gcd(self, self.derivative()).is_one


ZERO = Polynomial.constant(0)
ONE = Polynomial.constant(1)
IDENTITY = Polynomial.identity()


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor.

    sympy clears denominators and works over the integers with a heuristic gcd backed by
    a subresultant remainder sequence, which keeps coefficient growth under control.

    Args:
        a (Polynomial): first polynomial
        b (Polynomial): second polynomial

    Returns:
        Polynomial: monic gcd

    Raises:
        DomainError: when both inputs are zero

    Examples:
        >>> z = Polynomial.identity()
        >>> print(poly_gcd(z**2 - 1, z - 1))
        z - 1
        >>> print(poly_gcd(z, z**3 + 4))
        1
    """
    if a.is_zero and b.is_zero:
        raise DomainError("gcd of two zero polynomials is undefined")
    return Polynomial(a.poly.gcd(b.poly)).monic()


def exact_divide(a: Polynomial, b: Polynomial) -> Polynomial:
    """Divide, insisting on a zero remainder.

    Args:
        a (Polynomial): dividend
        b (Polynomial): nonzero divisor

    Returns:
        Polynomial: `q` with `a = q * b`

    Raises:
        InexactDivisionError: when the remainder is nonzero

    Examples:
        >>> z = Polynomial.identity()
        >>> print(exact_divide(z**7 + 20 * z**4 - 80 * z, z))
        z^6 + 20*z^3 - 80
    """
    quotient, remainder = a.divmod(b)
    if not remainder.is_zero:
        raise InexactDivisionError(quotient, remainder)
    return quotient


def squarefree_decomposition(a: Polynomial) -> list[tuple[Polynomial, int]]:
    """Squarefree factors with their multiplicities.

    Args:
        a (Polynomial): nonzero polynomial

    Returns:
        list[tuple[Polynomial, int]]: monic, squarefree, pairwise coprime factors with strictly increasing multiplicities

    Raises:
        DomainError: for the zero polynomial

    Examples:
        >>> z = Polynomial.identity()
        >>> [(str(f), k) for f, k in squarefree_decomposition(z**2 * (z**3 + 4) ** 2)]
        [('z^4 + 4*z', 2)]
    """
    if a.is_zero:
        raise DomainError("Squarefree decomposition of the zero polynomial")
    _, factors = a.poly.sqf_list()
    return sorted(
        ((Polynomial(factor).monic(), int(k)) for factor, k in factors),
        key=lambda item: item[1],
    )


def extended_euclid(
    a: Polynomial, b: Polynomial, c: Polynomial
) -> tuple[Polynomial, Polynomial]:
    """Solve `s*a + t*b = c` with `deg s < deg b` for coprime `a`, `b`.

    Args:
        a (Polynomial): first coefficient
        b (Polynomial): second coefficient, nonconstant
        c (Polynomial): right-hand side

    Returns:
        tuple[Polynomial, Polynomial]: the pair `(s, t)`

    Raises:
        DomainError: when `a` and `b` are not coprime
    """
    s0, _, h = a.poly.gcdex(b.poly)
    if not Polynomial(h).is_one:
        raise DomainError(f"{a} and {b} are not coprime")
    s = (Polynomial(s0) * c) % b
    t = exact_divide(c - s * a, b)
    return s, t


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic least common multiple of two nonzero polynomials.

    Args:
        a (Polynomial): first polynomial
        b (Polynomial): second polynomial

    Returns:
        Polynomial: monic lcm
    """
    return exact_divide(a * b, poly_gcd(a, b)).monic()
