"""Test exact polynomial arithmetic."""

from __future__ import annotations

import pytest
from sympy import Rational

from painleve_galois.common.exceptions import DomainError, InexactDivisionError
from painleve_galois.common.polynomial import (
    ONE,
    Polynomial,
    exact_divide,
    extended_euclid,
    poly_gcd,
    poly_lcm,
    squarefree_decomposition,
)


class TestPolynomial:
    """Test the polynomial wrapper."""

    def test_coefficients_lowest_degree_first(self: TestPolynomial) -> None:
        """Coefficients come back in the order they were given, trailing zeros dropped."""
        p = Polynomial.from_coefficients([4, 0, 0, 1, 0])
        assert p.coefficients == (4, 0, 0, 1)
        assert p.degree == 3

    def test_zero_has_no_degree(self: TestPolynomial) -> None:
        """The zero polynomial refuses to report a degree."""
        zero = Polynomial.constant(0)
        assert zero.is_zero
        assert zero.coefficients == ()
        with pytest.raises(DomainError):
            _ = zero.degree

    def test_arithmetic(self: TestPolynomial, zp: Polynomial) -> None:
        """Sums, products and powers agree with hand expansion."""
        assert (zp + 1) * (zp - 1) == zp**2 - 1
        assert 2 * zp - zp == zp
        assert (zp + 1) ** 3 == Polynomial.from_coefficients([1, 3, 3, 1])

    def test_negative_power_rejected(self: TestPolynomial, zp: Polynomial) -> None:
        """Polynomials have no negative powers."""
        with pytest.raises(DomainError):
            _ = zp**-1

    def test_rational_coefficients(self: TestPolynomial, zp: Polynomial) -> None:
        """Rational coefficients stay exact."""
        p = zp * Rational(1, 3) + Rational(1, 2)
        assert p.evaluate(3) == Rational(3, 2)
        assert not p.has_integer_coefficients
        assert str(p) == "(2*z + 3)/6"

    def test_derivative_and_antiderivative(self: TestPolynomial, zp: Polynomial) -> None:
        """Differentiating the antiderivative returns the input."""
        p = zp**3 - 4 * zp + 7
        assert p.antiderivative().derivative() == p
        assert p.derivative() == 3 * zp**2 - 4

    def test_monic(self: TestPolynomial, zp: Polynomial) -> None:
        """The monic associate has leading coefficient one."""
        assert (3 * zp**2 + 6).monic() == zp**2 + 2
        with pytest.raises(DomainError):
            Polynomial.constant(0).monic()

    def test_division_by_zero(self: TestPolynomial, zp: Polynomial) -> None:
        """Dividing by the zero polynomial is a domain error."""
        with pytest.raises(DomainError):
            zp.divmod(Polynomial.constant(0))

    def test_is_squarefree(self: TestPolynomial, zp: Polynomial) -> None:
        """Repeated roots are detected."""
        assert (zp**2 - 1).is_squarefree()
        assert not ((zp - 1) ** 2).is_squarefree()


def test_gcd_is_monic(zp: Polynomial) -> None:
    """The gcd is normalized to be monic."""
    assert poly_gcd(2 * zp**2 - 2, 4 * zp - 4) == zp - 1


def test_gcd_of_zeros() -> None:
    """The gcd of two zero polynomials is undefined."""
    zero = Polynomial.constant(0)
    with pytest.raises(DomainError):
        poly_gcd(zero, zero)


def test_lcm(zp: Polynomial) -> None:
    """The lcm divides by the gcd once."""
    assert poly_lcm(zp**2 - 1, zp - 1) == zp**2 - 1
    assert poly_lcm(zp, zp + 1) == zp**2 + zp


def test_exact_divide_remainder(zp: Polynomial) -> None:
    """An inexact division carries quotient and remainder."""
    with pytest.raises(InexactDivisionError) as excinfo:
        exact_divide(zp**2 + 1, zp)
    assert excinfo.value.quotient == zp
    assert excinfo.value.remainder == ONE


def test_squarefree_decomposition(zp: Polynomial) -> None:
    """Factors are monic and sorted by multiplicity."""
    p = 5 * zp * (zp + 1) ** 2 * (zp - 2) ** 3
    assert squarefree_decomposition(p) == [(zp, 1), (zp + 1, 2), (zp - 2, 3)]


def test_extended_euclid(zp: Polynomial) -> None:
    """The Bezout pair solves the equation with a reduced first cofactor."""
    a, b, c = zp + 2, zp**2 + 1, zp**3
    s, t = extended_euclid(a, b, c)
    assert s * a + t * b == c
    assert s.is_zero or s.degree < b.degree


def test_extended_euclid_needs_coprime_inputs(zp: Polynomial) -> None:
    """A common factor makes the equation unsolvable in general."""
    with pytest.raises(DomainError):
        extended_euclid(zp, zp**2, ONE)
