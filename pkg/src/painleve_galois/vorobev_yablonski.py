"""Step to print a Vorobev-Yablonski polynomial."""

from __future__ import annotations

from painleve_galois.common.session import Session
from painleve_galois.method.painleve_hierarchy import PainleveHierarchy


class VorobevYablonskiStep:
    """Vorobev-Yablonski polynomial step.

    Grows the session table up to `Q_n` and prints it.
    """

    def __init__(self, session: Session, n: int) -> None:
        """Run Vorobev-Yablonski polynomial step.

        The invariants compare `Q_n` with `Q_{n+1}`, so they are only checked while
        `n + 1` stays within the table.

        Args:
            session (Session): Session object.
            n (int): Index of the polynomial.
        """
        polynomial = PainleveHierarchy.vy_polynomial(n, session.table)
        if n <= session.table.max_n:
            invariants = PainleveHierarchy.check_invariants(n, session.table)
            session.logger.info(
                f"Q_{n} has degree {invariants.degree}, invariants hold: {invariants.holds}"
            )
        else:
            session.logger.warn(
                f"Invariants of Q_{n} not checked: Q_{n + 1} is beyond the table limit {session.table.max_n + 1}"
            )
        session.emit(str(polynomial))
