"""Rational solutions of the second Painleve equation."""

from __future__ import annotations

from dataclasses import dataclass

from painleve_galois.common.rational_function import RationalFunction


@dataclass(frozen=True)
class RationalPIISolution:
    """Solution `w(z, n)` of `w'' = 2w^3 + zw + n`.

    Attributes:
        parameter_n (int): the parameter `n`
        w (RationalFunction): the solution
    """

    parameter_n: int
    w: RationalFunction

    def __neg__(self: RationalPIISolution) -> RationalPIISolution:
        """Solution for the opposite parameter.

        Returns:
            RationalPIISolution: `-w` at parameter `-n`
        """
        return RationalPIISolution(-self.parameter_n, -self.w)
