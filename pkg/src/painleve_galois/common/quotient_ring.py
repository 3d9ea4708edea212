"""Arithmetic in Q[z] modulo a squarefree polynomial.

An element of Q[z]/(f) stands for the tuple of its values at every root of `f`, so a
statement such as "the Laurent coefficient equals 6 at every root of f" becomes the
equality of a quotient ring element with a constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from sympy import Rational

from painleve_galois.common.exceptions import DomainError, NonInvertibleError
from painleve_galois.common.polynomial import Polynomial, exact_divide, poly_gcd

if TYPE_CHECKING:
    from collections.abc import Iterable

Operand = Union["QuotientRingElement", Polynomial, int, Rational]


@dataclass(frozen=True, eq=False)
class QuotientRingElement:
    """Reduced representative of a residue class modulo a squarefree polynomial.

    Use `quotient_reduce` to build elements; the constructor assumes an already reduced
    representative and a validated modulus.
    """

    representative: Polynomial
    modulus: Polynomial

    def _lift(self: QuotientRingElement, other: Operand) -> Polynomial:
        if isinstance(other, QuotientRingElement):
            if other.modulus != self.modulus:
                raise DomainError(
                    f"Moduli differ: {self.modulus} and {other.modulus}"
                )
            return other.representative
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other)

    def _wrap(self: QuotientRingElement, p: Polynomial) -> QuotientRingElement:
        return QuotientRingElement(p % self.modulus, self.modulus)

    def __add__(self: QuotientRingElement, other: Operand) -> QuotientRingElement:
        return self._wrap(self.representative + self._lift(other))

    __radd__ = __add__

    def __sub__(self: QuotientRingElement, other: Operand) -> QuotientRingElement:
        return self._wrap(self.representative - self._lift(other))

    def __neg__(self: QuotientRingElement) -> QuotientRingElement:
        return self._wrap(-self.representative)

    def __mul__(self: QuotientRingElement, other: Operand) -> QuotientRingElement:
        return self._wrap(self.representative * self._lift(other))

    __rmul__ = __mul__

    def __eq__(self: QuotientRingElement, other: object) -> bool:
        if isinstance(other, (int, Rational, Polynomial)):
            return self.representative == self._lift(other) % self.modulus
        if not isinstance(other, QuotientRingElement):
            return NotImplemented
        return (
            self.modulus == other.modulus
            and self.representative == other.representative
        )

    def __hash__(self: QuotientRingElement) -> int:
        return hash((self.representative, self.modulus))

    def __repr__(self: QuotientRingElement) -> str:
        return f"QuotientRingElement({self.representative} mod {self.modulus})"

    @property
    def is_constant(self: QuotientRingElement) -> bool:
        """Whether the element takes the same rational value at every root.

        Returns:
            bool: True when the representative is constant
        """
        return self.representative.is_constant

    def constant_value(self: QuotientRingElement) -> Rational:
        """Common value at every root of the modulus.

        Returns:
            Rational: the constant representative

        Raises:
            DomainError: when the representative is not constant
        """
        if not self.is_constant:
            raise DomainError(f"{self!r} is not a constant")
        return self.representative.leading_coefficient


def quotient_reduce(p: Polynomial, modulus: Polynomial) -> QuotientRingElement:
    """Reduce a polynomial modulo a squarefree modulus.

    Args:
        p (Polynomial): polynomial to reduce
        modulus (Polynomial): squarefree polynomial of positive degree

    Returns:
        QuotientRingElement: element with `deg representative < deg modulus`

    Raises:
        DomainError: when the modulus is constant or not squarefree

    Examples:
        >>> z = Polynomial.identity()
        >>> quotient_reduce(z**2, z).representative.is_zero
        True
        >>> print(quotient_reduce(z + 1, z**2 + 1).representative)
        z + 1
    """
    if modulus.is_constant:
        raise DomainError(f"Modulus {modulus} must have positive degree")
    if not modulus.is_squarefree():
        raise DomainError(f"Modulus {modulus} is not squarefree")
    return QuotientRingElement(p % modulus, modulus)


def quotient_invert(x: QuotientRingElement) -> QuotientRingElement:
    """Multiplicative inverse in the quotient ring.

    Args:
        x (QuotientRingElement): element to invert

    Returns:
        QuotientRingElement: `y` with `x * y = 1`

    Raises:
        NonInvertibleError: when the representative shares a factor with the modulus

    Examples:
        >>> z = Polynomial.identity()
        >>> print(quotient_invert(quotient_reduce(z, z**2 + 1)).representative)
        -z
    """
    if x.representative.is_zero:
        raise NonInvertibleError(x.modulus.monic())
    s, _, h = x.representative.poly.gcdex(x.modulus.poly)
    common = Polynomial(h).monic()
    if not common.is_one:
        raise NonInvertibleError(common)
    inverse = Polynomial(s) * (1 / Polynomial(h).leading_coefficient)
    return QuotientRingElement(inverse % x.modulus, x.modulus)


def split_by_value(
    x: QuotientRingElement, candidates: Iterable[int | Rational]
) -> tuple[list[tuple[Polynomial, Rational]], Polynomial]:
    """Split the modulus into the factors on which `x` takes each candidate value.

    The factor on which `x` equals `c` is `gcd(modulus, representative - c)`.

    Args:
        x (QuotientRingElement): element whose values are inspected
        candidates (Iterable[int | Rational]): values to look for

    Returns:
        tuple[list[tuple[Polynomial, Rational]], Polynomial]: pairs (factor, value) for every candidate that occurs, and the leftover factor whose roots take none of the candidate values

    Examples:
        >>> z = Polynomial.identity()
        >>> x = quotient_reduce(z, z**2 - 1)
        >>> found, rest = split_by_value(x, [1, 5])
        >>> [(str(f), v) for f, v in found], rest.is_one
        ([('z - 1', 1)], False)
    """
    rest = x.modulus.monic()
    found: list[tuple[Polynomial, Rational]] = []
    for candidate in candidates:
        if rest.is_one:
            break
        value = Rational(candidate)
        common = poly_gcd(rest, x.representative - value)
        if not common.is_one:
            found.append((common, value))
            rest = exact_divide(rest, common)
    return found, rest
