"""Seeded random checks of the exact algebra."""

from __future__ import annotations

import random
from functools import reduce

import pytest
from sympy import Rational

from painleve_galois.common.integration import integrate_rational
from painleve_galois.common.polynomial import (
    ONE,
    Polynomial,
    exact_divide,
    poly_gcd,
    squarefree_decomposition,
)
from painleve_galois.common.quotient_ring import quotient_invert, quotient_reduce
from painleve_galois.common.rational_function import RationalFunction, derivative

SEEDS = range(5)
SAMPLES = 20


def _random_polynomial(
    rng: random.Random, max_degree: int, allow_zero: bool = False
) -> Polynomial:
    while True:
        degree = rng.randint(0, max_degree)
        coefficients = [
            Rational(rng.randint(-9, 9), rng.choice([1, 1, 1, 2, 3, 7]))
            for _ in range(degree + 1)
        ]
        p = Polynomial.from_coefficients(coefficients)
        if allow_zero or not p.is_zero:
            return p


def _random_function(rng: random.Random, max_degree: int) -> RationalFunction:
    return RationalFunction(
        _random_polynomial(rng, max_degree, allow_zero=True),
        _random_polynomial(rng, max_degree),
    )


@pytest.mark.parametrize("seed", SEEDS)
def test_exact_divide_inverts_product(seed: int) -> None:
    """`exact_divide(a * b, b)` gives back `a`."""
    rng = random.Random(seed)
    for _ in range(SAMPLES):
        a = _random_polynomial(rng, 6, allow_zero=True)
        b = _random_polynomial(rng, 6)
        assert exact_divide(a * b, b) == a


@pytest.mark.parametrize("seed", SEEDS)
def test_gcd_keeps_common_factor(seed: int) -> None:
    """A factor shared by both arguments divides their gcd."""
    rng = random.Random(seed)
    for _ in range(SAMPLES):
        g = _random_polynomial(rng, 4)
        a = _random_polynomial(rng, 8)
        b = _random_polynomial(rng, 8)
        common = poly_gcd(a * g, b * g)
        assert common.leading_coefficient == 1
        assert (common % g).is_zero


@pytest.mark.parametrize("seed", SEEDS)
def test_product_and_quotient_rules(seed: int) -> None:
    """Derivatives of products and quotients follow the usual rules."""
    rng = random.Random(seed)
    for _ in range(SAMPLES):
        f = _random_function(rng, 4)
        g = _random_function(rng, 4)
        assert derivative(f * g) == derivative(f) * g + f * derivative(g)
        if not g.is_zero:
            assert derivative(f / g) == (derivative(f) * g - f * derivative(g)) / g**2


@pytest.mark.parametrize("seed", SEEDS)
def test_squarefree_decomposition_reassembles(seed: int) -> None:
    """Factors are squarefree, pairwise coprime and multiply back to the monic input."""
    rng = random.Random(seed)
    for _ in range(SAMPLES):
        f = reduce(
            lambda acc, k: acc * _random_polynomial(rng, 2) ** k, (1, 2, 3), ONE
        )
        factors = squarefree_decomposition(f)
        product = reduce(lambda acc, item: acc * item[0] ** item[1], factors, ONE)
        assert product == f.monic()
        for factor, _ in factors:
            assert poly_gcd(factor, factor.derivative()).is_one
        for i, (first, _) in enumerate(factors):
            for second, _ in factors[i + 1 :]:
                assert poly_gcd(first, second).is_one


@pytest.mark.parametrize("seed", SEEDS)
def test_quotient_inverse(seed: int) -> None:
    """Units of the quotient ring multiply with their inverse to one."""
    rng = random.Random(seed)
    checked = 0
    while checked < SAMPLES:
        g = _random_polynomial(rng, 6)
        if g.is_constant:
            continue
        modulus = exact_divide(g, poly_gcd(g, g.derivative()))
        x = quotient_reduce(_random_polynomial(rng, 10), modulus)
        if x.representative.is_zero or not poly_gcd(x.representative, modulus).is_one:
            continue
        assert x * quotient_invert(x) == 1
        checked += 1


@pytest.mark.parametrize("seed", SEEDS)
def test_integrate_derivatives(seed: int) -> None:
    """Every derivative of a rational function integrates back to an antiderivative."""
    rng = random.Random(seed)
    for _ in range(SAMPLES):
        f = derivative(_random_function(rng, 5))
        assert derivative(integrate_rational(f)) == f
