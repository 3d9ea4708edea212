"""Step to print a rational solution of the second Painleve equation."""

from __future__ import annotations

from painleve_galois.common.exceptions import InternalInconsistencyError
from painleve_galois.common.expression import format_rational
from painleve_galois.common.session import Session
from painleve_galois.method.painleve_hierarchy import PainleveHierarchy


class RationalSolutionStep:
    """Rational solution step.

    Prints `w(z, n)`; with `verify` it also prints the residual and compares against the
    Backlund chain from `w = 0`.
    """

    def __init__(self, session: Session, n: int, verify: bool = False) -> None:
        """Run rational solution step.

        Args:
            session (Session): Session object.
            n (int): Parameter of the equation.
            verify (bool): Whether to print the residual and the Backlund comparison.

        Raises:
            InternalInconsistencyError: If the solution fails either check.
        """
        solution = PainleveHierarchy.rational_solution(n, session.table)
        lines = [format_rational(solution.w)]
        if verify:
            residual = PainleveHierarchy.pii_residual(solution.w, n)
            chain = PainleveHierarchy.backlund_chain(n)
            if not residual.is_zero or chain[-1] != solution.w:
                raise InternalInconsistencyError(
                    f"w(z, {n}) fails verification, residual {residual}"
                )
            session.logger.info(f"w(z, {n}) verified against {len(chain) - 1} Backlund steps")
            lines.extend([f"residual: {format_rational(residual)}", "backlund: agrees"])
        session.emit("\n".join(lines))
