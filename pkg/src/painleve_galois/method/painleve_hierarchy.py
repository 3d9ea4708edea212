"""Vorobev-Yablonski polynomials and rational solutions of the second Painleve equation."""

from __future__ import annotations

from typing import TYPE_CHECKING

from sympy import Rational

from painleve_galois.common.exceptions import (
    DomainError,
    InexactDivisionError,
    InternalInconsistencyError,
)
from painleve_galois.common.polynomial import IDENTITY, exact_divide, poly_gcd
from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.dataset.rational_solution import RationalPIISolution
from painleve_galois.dataset.vorobev_yablonski import (
    HierarchyInvariants,
    VorobevYablonskiTable,
)

if TYPE_CHECKING:
    from painleve_galois.common.polynomial import Polynomial

Z = RationalFunction.identity()


class PainleveHierarchy:
    """Rational hierarchy `w(z, n)` of `w'' = 2w^3 + zw + n`.

    Solutions are built from the polynomial table as
    `w(z, n) = Q_n'/Q_n - Q_{n+1}'/Q_{n+1}`, and for negative parameters through
    `w(z, -n) = -w(z, n)`.
    """

    @staticmethod
    def _table_for(
        n: int, table: VorobevYablonskiTable | None
    ) -> VorobevYablonskiTable:
        if table is not None:
            return table
        return VorobevYablonskiTable(max_n=max(abs(n), 16))

    @staticmethod
    def vy_polynomial(n: int, table: VorobevYablonskiTable | None = None) -> Polynomial:
        """Polynomial `Q_n`, growing the table through the three-term recursion.

        `Q_{k+1} Q_{k-1} = z Q_k^2 + 4 (Q_k')^2 - 4 Q_k Q_k''`.

        Args:
            n (int): nonnegative index
            table (VorobevYablonskiTable | None): shared table; a private one when None

        Returns:
            Polynomial: `Q_n`

        Raises:
            InternalInconsistencyError: when a recursion step does not divide exactly

        Examples:
            >>> print(PainleveHierarchy.vy_polynomial(4))
            z^6 + 20*z^3 - 80
        """
        table = PainleveHierarchy._table_for(n, table)
        table.check_index(n)
        with table.lock:
            while len(table) <= n:
                k = len(table) - 1
                current, previous = table[k], table[k - 1]
                first = current.derivative()
                numerator = (
                    IDENTITY * current**2
                    + 4 * first**2
                    - 4 * current * first.derivative()
                )
                try:
                    table.append(exact_divide(numerator, previous))
                except InexactDivisionError as exc:
                    raise InternalInconsistencyError(
                        f"Recursion step {k + 1} leaves remainder {exc.remainder}"
                    ) from exc
        return table[n]

    @staticmethod
    def rational_solution(
        n: int, table: VorobevYablonskiTable | None = None
    ) -> RationalPIISolution:
        """Rational solution `w(z, n)` for any integer `n`.

        Args:
            n (int): parameter
            table (VorobevYablonskiTable | None): shared table; a private one when None

        Returns:
            RationalPIISolution: the solution

        Examples:
            >>> print(PainleveHierarchy.rational_solution(2).w)
            (-2*z^3 + 4)/(z^4 + 4*z)
        """
        if n < 0:
            return -PainleveHierarchy.rational_solution(-n, table)
        table = PainleveHierarchy._table_for(n + 1, table)
        q_n = PainleveHierarchy.vy_polynomial(n, table)
        q_next = PainleveHierarchy.vy_polynomial(n + 1, table)
        w = RationalFunction(q_n.derivative(), q_n) - RationalFunction(
            q_next.derivative(), q_next
        )
        return RationalPIISolution(n, w)

    @staticmethod
    def backlund_step(w: RationalFunction, n: int) -> RationalFunction:
        """Map `w(z, n)` to `w(z, n + 1)`.

        `w(z, n + 1) = -w - (2n + 1) / (2w^2 + 2w' + z)`.

        Args:
            w (RationalFunction): solution at parameter `n`
            n (int): nonnegative parameter

        Returns:
            RationalFunction: solution at parameter `n + 1`

        Raises:
            DomainError: when `2w^2 + 2w' + z` vanishes identically
        """
        denominator = 2 * w**2 + 2 * w.derivative() + Z
        if denominator.is_zero:
            raise DomainError(f"Backlund denominator vanishes for w = {w}")
        return -w - (2 * n + 1) / denominator

    @staticmethod
    def backlund_chain(n: int) -> list[RationalFunction]:
        """Solutions `w(z, 0), ..., w(z, n)` by iterated Backlund steps from zero.

        Args:
            n (int): last parameter; negative values give `w(z, 0), ..., w(z, n)` by symmetry

        Returns:
            list[RationalFunction]: the chain, index `k` holding `w(z, ±k)`
        """
        chain = [RationalFunction.constant(0)]
        for k in range(abs(n)):
            chain.append(PainleveHierarchy.backlund_step(chain[-1], k))
        return chain if n >= 0 else [-w for w in chain]

    @staticmethod
    def pii_residual(w: RationalFunction, alpha: int | Rational) -> RationalFunction:
        """Residual `w'' - 2w^3 - zw - alpha`.

        Args:
            w (RationalFunction): candidate solution
            alpha (int | Rational): parameter

        Returns:
            RationalFunction: reduced residual, zero exactly for solutions

        Examples:
            >>> print(PainleveHierarchy.pii_residual(-1 / Z, 0))
            1
        """
        return w.derivative().derivative() - 2 * w**3 - Z * w - Rational(alpha)

    @staticmethod
    def symmetry_check(n: int, table: VorobevYablonskiTable | None = None) -> bool:
        """Whether `-w(z, n)` solves the equation with parameter `-n`.

        Args:
            n (int): parameter
            table (VorobevYablonskiTable | None): shared table

        Returns:
            bool: True when the residual vanishes
        """
        solution = PainleveHierarchy.rational_solution(n, table)
        return PainleveHierarchy.pii_residual(-solution.w, -n).is_zero

    @staticmethod
    def check_invariants(
        n: int, table: VorobevYablonskiTable | None = None
    ) -> HierarchyInvariants:
        """Degree, monicity, simple roots and coprimality of `Q_n` with `Q_{n+1}`.

        Args:
            n (int): nonnegative index
            table (VorobevYablonskiTable | None): shared table

        Returns:
            HierarchyInvariants: the observed facts
        """
        table = PainleveHierarchy._table_for(n + 1, table)
        current = PainleveHierarchy.vy_polynomial(n, table)
        following = PainleveHierarchy.vy_polynomial(n + 1, table)
        return HierarchyInvariants(
            parameter_n=n,
            degree=current.degree,
            expected_degree=n * (n - 1) // 2,
            monic=current.leading_coefficient == 1,
            simple_roots=poly_gcd(current, current.derivative()).is_one,
            coprime_with_next=poly_gcd(current, following).is_one,
            integer_coefficients=current.has_integer_coefficients,
        )
