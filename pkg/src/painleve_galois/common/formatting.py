"""Deterministic text rendering of exact polynomials and rational functions."""

from __future__ import annotations

from math import lcm
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Sequence

    from sympy import Rational

VARIABLE = "z"


def _monomial(degree: int) -> str:
    if degree == 0:
        return ""
    if degree == 1:
        return VARIABLE
    return f"{VARIABLE}^{degree}"


def format_integer_terms(coefficients: Sequence[int]) -> str:
    """Render integer coefficients (lowest degree first) as a sum in decreasing degree.

    Args:
        coefficients (Sequence[int]): coefficients indexed by degree

    Returns:
        str: text such as `z^6 + 20*z^3 - 80`, or `0` when all coefficients vanish

    Examples:
        >>> format_integer_terms([-80, 0, 0, 20, 0, 0, 1])
        'z^6 + 20*z^3 - 80'
        >>> format_integer_terms([0, -1])
        '-z'
        >>> format_integer_terms([])
        '0'
    """
    pieces: list[str] = []
    for degree in range(len(coefficients) - 1, -1, -1):
        coefficient = coefficients[degree]
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        monomial = _monomial(degree)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if coefficient < 0 else body)
        else:
            pieces.append(f" - {body}" if coefficient < 0 else f" + {body}")
    return "".join(pieces) if pieces else "0"


def _term_count(coefficients: Sequence[int]) -> int:
    return sum(1 for c in coefficients if c != 0)


def format_rational_parts(
    numerator: Sequence[Rational], denominator: Sequence[Rational]
) -> str:
    """Render a reduced fraction with integer coefficients wherever possible.

    Both coefficient sequences are scaled by the least common multiple of every
    coefficient denominator, which keeps the rendering canonical for a canonical input.

    Args:
        numerator (Sequence[Rational]): numerator coefficients, lowest degree first
        denominator (Sequence[Rational]): monic denominator coefficients, lowest degree first

    Returns:
        str: rendered fraction
    """
    if not any(c != 0 for c in numerator):
        return "0"
    scale = lcm(*(int(c.q) for c in (*numerator, *denominator)))
    top = [int(c * scale) for c in numerator]
    bottom = [int(c * scale) for c in denominator]
    top_text = format_integer_terms(top)
    if _term_count(top) > 1:
        top_text = f"({top_text})"
    if len(bottom) == 1:
        if bottom[0] == 1:
            return format_integer_terms(top)
        return f"{top_text}/{bottom[0]}"
    bottom_text = format_integer_terms(bottom)
    if _term_count(bottom) > 1 or bottom[-1] != 1:
        bottom_text = f"({bottom_text})"
    return f"{top_text}/{bottom_text}"
