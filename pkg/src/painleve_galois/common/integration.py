"""Antiderivatives of rational functions without logarithmic part."""

from __future__ import annotations

from sympy import Rational

from painleve_galois.common.exceptions import (
    InternalInconsistencyError,
    NonRationalAntiderivativeError,
)
from painleve_galois.common.polynomial import (
    exact_divide,
    extended_euclid,
    poly_gcd,
    squarefree_decomposition,
)
from painleve_galois.common.rational_function import RationalFunction


def hermite_reduce(f: RationalFunction) -> tuple[RationalFunction, RationalFunction]:
    """Split `f` into a rational part and a remainder with squarefree denominator.

    Returns `(g, h)` with `f = g' + h`, where `h` is a proper fraction whose denominator
    is squarefree, or a polynomial.

    Args:
        f (RationalFunction): function to reduce

    Returns:
        tuple[RationalFunction, RationalFunction]: the rational part `g` and the remainder `h`
    """
    quotient, a = f.numerator.divmod(f.denominator)
    d = f.denominator
    g = RationalFunction.from_polynomial(quotient.antiderivative())
    if a.is_zero:
        return g, RationalFunction.constant(0)
    for v, multiplicity in squarefree_decomposition(d):
        if multiplicity < 2 or v.is_constant:
            continue
        u = exact_divide(d, v**multiplicity)
        for j in range(multiplicity - 1, 0, -1):
            b, c = extended_euclid(u * v.derivative(), v, a * Rational(-1, j))
            g = g + RationalFunction(b, v**j)
            a = c * (-j) - u * b.derivative()
        d = u * v
    return g, RationalFunction(a, d)


def integrate_rational(f: RationalFunction) -> RationalFunction:
    """Rational antiderivative with zero integration constant.

    Args:
        f (RationalFunction): integrand whose residues all vanish

    Returns:
        RationalFunction: `F` with `F' = f` and no constant term in the polynomial part

    Raises:
        NonRationalAntiderivativeError: when some residue is nonzero; the error names the squarefree factor whose roots carry them
        InternalInconsistencyError: when differentiating the result does not give back `f`

    Examples:
        >>> z = RationalFunction.identity()
        >>> print(integrate_rational(1 / z**2))
        -1/z
        >>> print(integrate_rational(z))
        z^2/2
    """
    g, h = hermite_reduce(f)
    if not h.is_zero:
        top, bottom = h.numerator, h.denominator
        if bottom.is_one:
            g = g + RationalFunction.from_polynomial(top.antiderivative())
        else:
            quotient, remainder = top.divmod(bottom)
            if not remainder.is_zero:
                raise NonRationalAntiderivativeError(
                    exact_divide(bottom, poly_gcd(bottom, remainder))
                )
            g = g + RationalFunction.from_polynomial(quotient.antiderivative())
    if g.derivative() != f:
        raise InternalInconsistencyError(
            f"Antiderivative {g} does not differentiate back to {f}"
        )
    return g
