"""Pole classes, Laurent data and orders at infinity of a potential `r = R/S`."""

from __future__ import annotations

from collections import Counter
from dataclasses import replace

from sympy import Poly, Rational, Symbol, resultant

from painleve_galois.common.exceptions import (
    DomainError,
    InternalInconsistencyError,
    NonInvertibleError,
)
from painleve_galois.common.polynomial import Z as Z_SYMBOL
from painleve_galois.common.polynomial import (
    Polynomial,
    exact_divide,
    squarefree_decomposition,
)
from painleve_galois.common.quotient_ring import (
    QuotientRingElement,
    quotient_invert,
    quotient_reduce,
    split_by_value,
)
from painleve_galois.common.rational import rational_sqrt
from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.dataset.singularity_profile import (
    PoleClass,
    RootValue,
    SingularityProfile,
)

T = Symbol("t")


def _as_root_value(x: QuotientRingElement) -> RootValue:
    return x.constant_value() if x.is_constant else x


class SingularityProfiler:
    """Singular points of `y'' = r y` and their local data."""

    @staticmethod
    def _cofactor(r: RationalFunction, pole_class: PoleClass) -> Polynomial:
        return exact_divide(r.denominator, pole_class.factor**pole_class.order)

    @staticmethod
    def _invert(x: QuotientRingElement) -> QuotientRingElement:
        try:
            return quotient_invert(x)
        except NonInvertibleError as exc:
            raise InternalInconsistencyError(
                f"Derivative of squarefree {x.modulus} shares the factor {exc.gcd}"
            ) from exc

    @staticmethod
    def laurent_alpha(r: RationalFunction, pole_class: PoleClass) -> RootValue:
        """Coefficient of `(z - c)^-2` at every root `c` of an order-2 class.

        With `S = g^2 U`, the coefficient at a root of `g` is `R / (g'^2 U)` there, which
        is computed in `Q[z]/(g)`.

        Args:
            r (RationalFunction): potential
            pole_class (PoleClass): class of order 2

        Returns:
            RootValue: a rational when it is the same at every root, else the quotient ring element

        Raises:
            DomainError: when the class is not of order 2

        Examples:
            >>> z = RationalFunction.identity()
            >>> r = 6 / z**2 + z
            >>> SingularityProfiler.laurent_alpha(r, PoleClass(z.numerator, 2, 1))
            6
        """
        if pole_class.order != 2:
            raise DomainError(f"Laurent alpha needs order 2, got {pole_class.order}")
        g = pole_class.factor
        u = SingularityProfiler._cofactor(r, pole_class)
        denominator = quotient_reduce(g.derivative() ** 2 * u, g)
        alpha = quotient_reduce(r.numerator, g) * SingularityProfiler._invert(
            denominator
        )
        return _as_root_value(alpha)

    @staticmethod
    def laurent_beta(r: RationalFunction, pole_class: PoleClass) -> RootValue:
        """Coefficient of `(z - c)^-1` at every root `c` of an order-2 class.

        Equal to `(R' g' U - R (g'' U + g' U')) / (g'^3 U^2)` at the roots of `g`.

        Args:
            r (RationalFunction): potential
            pole_class (PoleClass): class of order 2

        Returns:
            RootValue: a rational when it is the same at every root, else the quotient ring element

        Raises:
            DomainError: when the class is not of order 2
        """
        if pole_class.order != 2:
            raise DomainError(f"Laurent beta needs order 2, got {pole_class.order}")
        g = pole_class.factor
        u = SingularityProfiler._cofactor(r, pole_class)
        top, g1 = r.numerator, g.derivative()
        numerator = top.derivative() * g1 * u - top * (
            g1.derivative() * u + g1 * u.derivative()
        )
        denominator = quotient_reduce(g1**3 * u**2, g)
        beta = quotient_reduce(numerator, g) * SingularityProfiler._invert(denominator)
        return _as_root_value(beta)

    @staticmethod
    def _rational_values(x: QuotientRingElement) -> list[Rational]:
        """Rational values taken by `x` at the roots of its modulus.

        They are the rational roots of the norm `res_z(g(z), t - x(z))`.

        Args:
            x (QuotientRingElement): element to inspect

        Returns:
            list[Rational]: candidate values in increasing order
        """
        norm = resultant(
            x.modulus.poly.as_expr(), T - x.representative.poly.as_expr(), Z_SYMBOL
        )
        return sorted(Poly(norm, T).ground_roots())

    @staticmethod
    def _with_laurent_data(r: RationalFunction, bare: PoleClass) -> list[PoleClass]:
        """Attach alpha, beta and delta, splitting the class where alpha varies.

        Args:
            r (RationalFunction): potential
            bare (PoleClass): order-2 class without Laurent data

        Returns:
            list[PoleClass]: classes on which alpha is constant, followed by the leftover class whose alpha is not a rational
        """
        alpha = SingularityProfiler.laurent_alpha(r, bare)
        if not isinstance(alpha, QuotientRingElement):
            return [
                replace(
                    bare,
                    alpha=alpha,
                    beta=SingularityProfiler.laurent_beta(r, bare),
                    delta=rational_sqrt(1 + 4 * alpha),
                )
            ]
        found, rest = split_by_value(alpha, SingularityProfiler._rational_values(alpha))
        classes: list[PoleClass] = []
        for factor, _ in found:
            classes.extend(
                SingularityProfiler._with_laurent_data(
                    r, PoleClass(factor, 2, factor.degree)
                )
            )
        if not rest.is_one:
            leftover = PoleClass(rest, 2, rest.degree)
            classes.append(
                replace(
                    leftover,
                    alpha=SingularityProfiler.laurent_alpha(r, leftover),
                    beta=SingularityProfiler.laurent_beta(r, leftover),
                )
            )
        return classes

    @staticmethod
    def singularity_profile(r: RationalFunction) -> SingularityProfile:
        """Pole classes from the squarefree decomposition of `S` and the orders at infinity.

        Args:
            r (RationalFunction): nonzero potential

        Returns:
            SingularityProfile: the profile

        Raises:
            DomainError: for the zero potential
            InternalInconsistencyError: when the weighted pole count differs from `deg S`

        Examples:
            >>> z = RationalFunction.identity()
            >>> profile = SingularityProfiler.singularity_profile(6 / z**2 + z)
            >>> profile.o_infinity_paper, profile.order_at_infinity, profile.gamma
            (5, -1, 2)
        """
        if r.is_zero:
            raise DomainError("The zero potential has no singularity profile")
        numerator, denominator = r.numerator, r.denominator
        classes: list[PoleClass] = []
        if not denominator.is_constant:
            for factor, order in squarefree_decomposition(denominator):
                bare = PoleClass(factor, order, factor.degree)
                if order == 2:
                    classes.extend(SingularityProfiler._with_laurent_data(r, bare))
                else:
                    classes.append(bare)
        profile_classes = tuple(classes)
        if sum(c.order * c.root_count for c in profile_classes) != denominator.degree:
            raise InternalInconsistencyError(
                f"Pole classes do not account for the denominator {denominator}"
            )
        order_at_infinity = denominator.degree - numerator.degree
        o_infinity_paper = max(0, 4 - order_at_infinity)
        counts: Counter[int] = Counter()
        for pole_class in profile_classes:
            counts[pole_class.order] += pole_class.root_count
        if o_infinity_paper > 0:
            counts[o_infinity_paper] += 1
        m_plus = max([c.order for c in profile_classes] + [o_infinity_paper])
        gamma = counts[2] + sum(counts[k] for k in range(3, m_plus + 1, 2))
        return SingularityProfile(
            pole_classes=profile_classes,
            o_infinity_paper=o_infinity_paper,
            order_at_infinity=order_at_infinity,
            infinity_coefficient=r.coefficient_at_infinity(2)
            if order_at_infinity >= 2
            else None,
            m_plus=m_plus,
            gamma_counts=tuple(sorted(counts.items())),
            gamma=gamma,
        )
