"""Pole data of a potential `r = R/S` and the exponent sets derived from it."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from sympy import Rational

if TYPE_CHECKING:
    from painleve_galois.common.polynomial import Polynomial
    from painleve_galois.common.quotient_ring import QuotientRingElement

RootValue = Union[Rational, "QuotientRingElement"]


@dataclass(frozen=True)
class PoleClass:
    """All roots of one squarefree factor of `S`, sharing a pole order.

    Laurent data are values in `Q[z]/(factor)`: a rational when they are equal at every
    root, otherwise the reduced quotient ring element.

    Attributes:
        factor (Polynomial): monic squarefree factor
        order (int): pole order shared by every root
        root_count (int): degree of the factor
        alpha (RootValue | None): coefficient of `(z - c)^-2`, set for order 2
        beta (RootValue | None): coefficient of `(z - c)^-1`, set for order 2
        delta (Rational | None): `sqrt(1 + 4 alpha)` when it is rational
    """

    factor: Polynomial
    order: int
    root_count: int
    alpha: RootValue | None = None
    beta: RootValue | None = None
    delta: Rational | None = None

    @property
    def alpha_is_constant(self: PoleClass) -> bool:
        """Whether alpha is one rational shared by every root.

        Returns:
            bool: True for a rational alpha
        """
        return isinstance(self.alpha, Rational)


@dataclass(frozen=True)
class SingularityProfile:
    """Singular points of `y'' = r y`.

    Two orders at infinity are kept: `o_infinity_paper = max(0, 4 + deg R - deg S)` for
    the reported diagnostics and `order_at_infinity = deg S - deg R` for the case filter.

    Attributes:
        pole_classes (tuple[PoleClass, ...]): finite poles grouped by squarefree factor
        o_infinity_paper (int): `max(0, 4 + deg R - deg S)`
        order_at_infinity (int): `deg S - deg R`
        infinity_coefficient (Rational | None): limit of `z^2 r` at infinity, None when unbounded
        m_plus (int): largest order over the finite poles and infinity
        gamma_counts (tuple[tuple[int, int], ...]): pairs (order, number of points of that order)
        gamma (int): points of order 2 plus points of odd order between 3 and `m_plus`
    """

    pole_classes: tuple[PoleClass, ...]
    o_infinity_paper: int
    order_at_infinity: int
    infinity_coefficient: Rational | None
    m_plus: int
    gamma_counts: tuple[tuple[int, int], ...]
    gamma: int

    @property
    def has_finite_poles(self: SingularityProfile) -> bool:
        """Whether `r` has a pole in the finite plane.

        Returns:
            bool: True when some pole class exists
        """
        return bool(self.pole_classes)

    @property
    def pole_orders(self: SingularityProfile) -> tuple[int, ...]:
        """Orders of the pole classes.

        Returns:
            tuple[int, ...]: one order per class
        """
        return tuple(c.order for c in self.pole_classes)

    @property
    def total_pole_degree(self: SingularityProfile) -> int:
        """Sum of `order * root_count`, equal to `deg S`.

        Returns:
            int: weighted number of finite poles
        """
        return sum(c.order * c.root_count for c in self.pole_classes)


@dataclass(frozen=True)
class ExponentData:
    """Exponent sets for the imprimitive case.

    A class whose `1 + 4 alpha` is not a rational square has no set and leaves the case
    undecided.

    Attributes:
        per_class (tuple[tuple[Polynomial, tuple[int, ...] | None], ...]): pairs (factor, sorted exponent set)
        at_infinity (tuple[int, ...] | None): set at infinity used with the all-points degree formula
        at_infinity_classic (tuple[int, ...] | None): set at infinity used with the classic degree formula
    """

    per_class: tuple[tuple[Polynomial, tuple[int, ...] | None], ...]
    at_infinity: tuple[int, ...] | None
    at_infinity_classic: tuple[int, ...] | None

    @property
    def decided(self: ExponentData) -> bool:
        """Whether every set is available.

        Returns:
            bool: True when no class and neither infinity set is missing
        """
        return (
            all(exponents is not None for _, exponents in self.per_class)
            and self.at_infinity is not None
            and self.at_infinity_classic is not None
        )
