"""Exact rational scalars."""

from __future__ import annotations

from sympy import Rational, integer_nthroot

from painleve_galois.common.exceptions import DomainError


def to_rational(value: int | str | Rational) -> Rational:
    """Convert integers, exact decimal strings or fraction strings to a canonical rational.

    Args:
        value (int | str | Rational): value such as `3`, `"-8"`, `"1/2"` or `"0.25"`

    Returns:
        Rational: reduced rational with positive denominator

    Raises:
        DomainError: when a string does not denote an exact rational

    Examples:
        >>> to_rational("6/4")
        3/2
        >>> to_rational("-0.25")
        -1/4
    """
    if isinstance(value, str):
        try:
            result = Rational(value.strip())
        except (TypeError, ValueError) as exc:
            raise DomainError(f"Not an exact rational: {value!r}") from exc
        return result
    return Rational(value)


def rational_sqrt(value: Rational) -> Rational | None:
    """Nonnegative square root when the argument is the square of a rational.

    Args:
        value (Rational): the radicand

    Returns:
        Rational | None: exact root, or None when the radicand is not a rational square

    Examples:
        >>> rational_sqrt(Rational(25))
        5
        >>> rational_sqrt(Rational(4, 9))
        2/3
        >>> print(rational_sqrt(Rational(2)))
        None
    """
    value = Rational(value)
    if value < 0:
        return None
    numerator_root, numerator_exact = integer_nthroot(int(value.p), 2)
    denominator_root, denominator_exact = integer_nthroot(int(value.q), 2)
    if not (numerator_exact and denominator_exact):
        return None
    return Rational(numerator_root, denominator_root)


def format_rational_scalar(value: Rational) -> str:
    """Exact decimal string of an integer or a fraction.

    Args:
        value (Rational): scalar

    Returns:
        str: text such as `-8` or `1/2`

    Examples:
        >>> format_rational_scalar(Rational(-8))
        '-8'
    """
    value = Rational(value)
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"
