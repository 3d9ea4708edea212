"""Step to print the potential of the normal variational equation."""

from __future__ import annotations

from painleve_galois.common.exceptions import InternalInconsistencyError
from painleve_galois.common.expression import format_rational
from painleve_galois.common.session import Session
from painleve_galois.method.nve_builder import NVEBuilder


class NormalVariationalStep:
    """Normal variational equation step.

    Prints `r(z)` of `xi'' = r xi` along `w(z, n)` after checking the reduction from the
    variational system.
    """

    def __init__(self, session: Session, n: int) -> None:
        """Run normal variational equation step.

        Args:
            session (Session): Session object.
            n (int): Parameter of the equation.

        Raises:
            InternalInconsistencyError: If the normal block does not reduce to `r`.
        """
        problem = NVEBuilder.nve_potential(n, session.table)
        if not NVEBuilder.reduction_identity_check(n, session.table):
            raise InternalInconsistencyError(f"Normal block does not reduce for n = {n}")
        session.logger.info(
            f"r(z) for n = {n} has degrees ({problem.numerator_R.degree}, {problem.denominator_S.degree})"
        )
        session.emit(format_rational(problem.r))
