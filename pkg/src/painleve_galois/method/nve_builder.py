"""Extended Hamiltonian system, its variational equations and the normal variational equation."""

from __future__ import annotations

from typing import TYPE_CHECKING

from sympy import QQ, Matrix, Poly, Rational, diff, symbols

from painleve_galois.common.exceptions import DomainError, InternalInconsistencyError
from painleve_galois.common.integration import integrate_rational
from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.dataset.nve_problem import (
    NVEProblem,
    ParticularSolution,
    VariationalSystem,
)
from painleve_galois.method.painleve_hierarchy import PainleveHierarchy

if TYPE_CHECKING:
    from collections.abc import Sequence

    from sympy import Expr

    from painleve_galois.dataset.nve_problem import Matrix as RationalMatrix
    from painleve_galois.dataset.vorobev_yablonski import VorobevYablonskiTable

# Phase variables in the order used by every matrix below.
Q, P, ZS, F = symbols("q p z F")
PHASE_VARIABLES = (Q, P, ZS, F)

Z = RationalFunction.identity()
HALF = Rational(1, 2)


def _substitute(expr: Expr, values: Sequence[RationalFunction]) -> RationalFunction:
    """Evaluate a polynomial in the phase variables at rational functions.

    Args:
        expr (Expr): polynomial in `q, p, z, F` with rational coefficients
        values (Sequence[RationalFunction]): values of `q, p, z, F`

    Returns:
        RationalFunction: the value
    """
    result = RationalFunction.constant(0)
    for monomial, coefficient in Poly(expr, *PHASE_VARIABLES, domain=QQ).terms():
        term = RationalFunction.constant(QQ.to_sympy(coefficient))
        for value, exponent in zip(values, monomial):
            if exponent:
                term = term * value**exponent
        result = result + term
    return result


class NVEBuilder:
    """Variational analysis of the autonomous extension of the Painleve II Hamiltonian.

    The extended Hamiltonian is
    `H = p^2/2 + F - (q^2 + z/2) p - (alpha + 1/2) q` on the phase space `(q, p, z, F)`,
    with `(z, F)` a canonical pair, so the flow carries `z' = 1` and `F' = p/2`.
    """

    @staticmethod
    def extended_hamiltonian(alpha: int | Rational) -> Expr:
        """Symbolic extended Hamiltonian.

        Args:
            alpha (int | Rational): parameter

        Returns:
            Expr: `H(q, p, z, F)`
        """
        return P**2 / 2 + F - (Q**2 + ZS / 2) * P - (Rational(alpha) + HALF) * Q

    @staticmethod
    def vector_field(alpha: int | Rational) -> tuple[Expr, Expr, Expr, Expr]:
        """Hamiltonian vector field `(dH/dp, -dH/dq, dH/dF, -dH/dz)`.

        Args:
            alpha (int | Rational): parameter

        Returns:
            tuple[Expr, Expr, Expr, Expr]: right-hand sides for `q, p, z, F`
        """
        h = NVEBuilder.extended_hamiltonian(alpha)
        return (diff(h, P), -diff(h, Q), diff(h, F), -diff(h, ZS))

    @staticmethod
    def jacobian(alpha: int | Rational) -> Matrix:
        """Jacobian of the vector field with respect to `(q, p, z, F)`.

        Args:
            alpha (int | Rational): parameter

        Returns:
            Matrix: 4x4 symbolic matrix
        """
        return Matrix(NVEBuilder.vector_field(alpha)).jacobian(list(PHASE_VARIABLES))

    @staticmethod
    def hamiltonian_value(
        q: RationalFunction,
        p: RationalFunction,
        z: RationalFunction,
        F: RationalFunction,  # noqa: N803
        alpha: int | Rational,
    ) -> RationalFunction:
        """Extended Hamiltonian evaluated at rational functions.

        Args:
            q (RationalFunction): position
            p (RationalFunction): momentum
            z (RationalFunction): independent variable as a coordinate
            F (RationalFunction): momentum conjugate to `z`
            alpha (int | Rational): parameter

        Returns:
            RationalFunction: value of `H`

        Examples:
            >>> zero = RationalFunction.constant(0)
            >>> print(NVEBuilder.hamiltonian_value(zero, zero, Z, zero, 0))
            0
        """
        return _substitute(NVEBuilder.extended_hamiltonian(alpha), (q, p, z, F))

    @staticmethod
    def particular_solution(
        n: int, table: VorobevYablonskiTable | None = None
    ) -> ParticularSolution:
        """Rational phase curve `q = w, p = w' + w^2 + z/2, F = 1/2 * integral of p`.

        Args:
            n (int): parameter
            table (VorobevYablonskiTable | None): shared polynomial table

        Returns:
            ParticularSolution: the verified curve

        Raises:
            InternalInconsistencyError: when the curve does not solve the Hamiltonian equations or the Hamiltonian is not constant on it
        """
        w = PainleveHierarchy.rational_solution(n, table).w
        p = w.derivative() + w**2 + Z / 2
        f_value = integrate_rational(p) * HALF
        values = (w, p, Z, f_value)
        for name, coordinate, rhs in zip(
            ("q", "p", "z", "F"), values, NVEBuilder.vector_field(n)
        ):
            if coordinate.derivative() != _substitute(rhs, values):
                raise InternalInconsistencyError(
                    f"Equation for {name}' fails along the curve for n = {n}"
                )
        hamiltonian = NVEBuilder.hamiltonian_value(w, p, Z, f_value, n)
        if not hamiltonian.is_constant:
            raise InternalInconsistencyError(
                f"Hamiltonian {hamiltonian} is not constant along the curve for n = {n}"
            )
        return ParticularSolution(
            parameter_n=n,
            q=w,
            p=p,
            z=Z,
            F=f_value,
            hamiltonian=hamiltonian.constant_value(),
        )

    @staticmethod
    def variational_system(
        n: int, table: VorobevYablonskiTable | None = None
    ) -> VariationalSystem:
        """Jacobian along the particular solution and its upper-left block.

        Args:
            n (int): parameter
            table (VorobevYablonskiTable | None): shared polynomial table

        Returns:
            VariationalSystem: the 4x4 matrix and the 2x2 normal block

        Raises:
            InternalInconsistencyError: when the matrix differs from its closed form
        """
        solution = NVEBuilder.particular_solution(n, table)
        values = (solution.q, solution.p, solution.z, solution.F)
        jacobian = NVEBuilder.jacobian(n)
        matrix = tuple(
            tuple(_substitute(jacobian[i, j], values) for j in range(4))
            for i in range(4)
        )
        w, p = solution.q, solution.p
        zero, one = RationalFunction.constant(0), RationalFunction.constant(1)
        closed_form = (
            (-2 * w, one, RationalFunction.constant(-HALF), zero),
            (2 * p, 2 * w, zero, zero),
            (zero, zero, zero, zero),
            (zero, RationalFunction.constant(HALF), zero, zero),
        )
        if matrix != closed_form:
            raise InternalInconsistencyError(
                f"Variational matrix differs from its closed form for n = {n}"
            )
        nve_block = tuple(row[:2] for row in matrix[:2])
        return VariationalSystem(parameter_n=n, matrix=matrix, nve_block=nve_block)

    @staticmethod
    def eliminate_second_component(
        block: RationalMatrix,
    ) -> tuple[RationalFunction, RationalFunction]:
        """Second-order equation for `xi` from `xi' = a xi + b eta, eta' = c xi + d eta`.

        Args:
            block (RationalMatrix): the 2x2 matrix `((a, b), (c, d))`

        Returns:
            tuple[RationalFunction, RationalFunction]: `(a1, a0)` with `xi'' = a1 xi' + a0 xi`

        Raises:
            DomainError: when `b` vanishes and `eta` cannot be eliminated
        """
        (a, b), (c, d) = block
        if b.is_zero:
            raise DomainError("Upper-right entry vanishes; eta cannot be eliminated")
        k = (b.derivative() + b * d) / b
        return a + k, a.derivative() + b * c - a * k

    @staticmethod
    def nve_potential(
        n: int, table: VorobevYablonskiTable | None = None
    ) -> NVEProblem:
        """Potential `r = 6 w^2 + z` of `xi'' = r xi`.

        Args:
            n (int): parameter
            table (VorobevYablonskiTable | None): shared polynomial table

        Returns:
            NVEProblem: the reduced potential

        Raises:
            InternalInconsistencyError: when the degrees differ from `2n^2 + 1` and `2n^2` for `n != 0`

        Examples:
            >>> print(NVEBuilder.nve_potential(1).r)
            (z^3 + 6)/z^2
        """
        w = PainleveHierarchy.rational_solution(n, table).w
        r = 6 * w**2 + Z
        problem = NVEProblem(
            parameter_n=n,
            r=r,
            numerator_R=r.numerator,
            denominator_S=r.denominator,
        )
        if n != 0 and (
            problem.denominator_S.degree != 2 * n**2
            or problem.numerator_R.degree != 2 * n**2 + 1
        ):
            raise InternalInconsistencyError(
                f"Potential degrees ({problem.numerator_R.degree}, {problem.denominator_S.degree}) for n = {n}"
            )
        return problem

    @staticmethod
    def reduction_identity_check(
        n: int, table: VorobevYablonskiTable | None = None
    ) -> bool:
        """Whether eliminating `eta` from the normal block gives `xi'' = (6 w^2 + z) xi`.

        Checks `-2w' + 2p + 4w^2 = 6w^2 + z` for `p = w' + w^2 + z/2`, and that the
        generic elimination has no `xi'` term.

        Args:
            n (int): parameter
            table (VorobevYablonskiTable | None): shared polynomial table

        Returns:
            bool: True when the reduction holds exactly
        """
        w = PainleveHierarchy.rational_solution(n, table).w
        p = w.derivative() + w**2 + Z / 2
        r = 6 * w**2 + Z
        if -2 * w.derivative() + 2 * p + 4 * w**2 != r:
            return False
        block = ((-2 * w, RationalFunction.constant(1)), (2 * p, 2 * w))
        a1, a0 = NVEBuilder.eliminate_second_component(block)
        return a1.is_zero and a0 == r

    @staticmethod
    def non_autonomous_check(
        n: int, table: VorobevYablonskiTable | None = None
    ) -> bool:
        """Whether the original Hamiltonian obeys `dH/dz = partial H/partial z` along the curve.

        The original Hamiltonian is the extended one with `F = 0`.

        Args:
            n (int): parameter
            table (VorobevYablonskiTable | None): shared polynomial table

        Returns:
            bool: True when the identity holds exactly
        """
        solution = NVEBuilder.particular_solution(n, table)
        original = NVEBuilder.extended_hamiltonian(n) - F
        values = (solution.q, solution.p, solution.z, solution.F)
        total = _substitute(original, values).derivative()
        return total == _substitute(diff(original, ZS), values)
