"""Records produced while building the normal variational equation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from sympy import Rational

    from painleve_galois.common.polynomial import Polynomial
    from painleve_galois.common.rational_function import RationalFunction

Matrix = tuple[tuple["RationalFunction", ...], ...]


@dataclass(frozen=True)
class ParticularSolution:
    """Rational phase curve of the extended Hamiltonian system.

    Attributes:
        parameter_n (int): parameter `n = alpha`
        q (RationalFunction): `w(z, n)`
        p (RationalFunction): `w' + w^2 + z/2`
        z (RationalFunction): the identity, since `z = s` along the curve
        F (RationalFunction): `1/2 * integral of p` with zero constant
        hamiltonian (Rational): constant value of the extended Hamiltonian on the curve
    """

    parameter_n: int
    q: RationalFunction
    p: RationalFunction
    z: RationalFunction
    F: RationalFunction  # noqa: N815
    hamiltonian: Rational


@dataclass(frozen=True)
class VariationalSystem:
    """Linearization along the particular solution, variables ordered `(q, p, z, F)`.

    Attributes:
        parameter_n (int): parameter `n`
        matrix (Matrix): 4x4 coefficient matrix
        nve_block (Matrix): upper-left 2x2 block
    """

    parameter_n: int
    matrix: Matrix
    nve_block: Matrix


@dataclass(frozen=True)
class NVEProblem:
    """Potential of `xi'' = r xi` with its provenance.

    Attributes:
        parameter_n (int): parameter `n`
        r (RationalFunction): `6 w^2 + z`
        numerator_R (Polynomial): numerator of `r`
        denominator_S (Polynomial): monic denominator of `r`
    """

    parameter_n: int
    r: RationalFunction
    numerator_R: Polynomial  # noqa: N815
    denominator_S: Polynomial  # noqa: N815
