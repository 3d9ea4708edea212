"""Step to run the Kovacic analysis of one equation."""

from __future__ import annotations

from painleve_galois.common.exceptions import DomainError
from painleve_galois.common.expression import parse_rational_expression
from painleve_galois.common.session import Session
from painleve_galois.common.types import ReportFormat
from painleve_galois.dataset.report import Report
from painleve_galois.method.kovacic import Kovacic
from painleve_galois.method.nve_builder import NVEBuilder


class GaloisAnalysisStep:
    """Galois analysis step.

    Analyses either the normal variational equation along `w(z, n)` or a user supplied
    `y'' = r y`, and prints the certificate.
    """

    def __init__(
        self,
        session: Session,
        n: int | None = None,
        r: str | None = None,
        format: ReportFormat = "text",
    ) -> None:
        """Run Galois analysis step.

        Args:
            session (Session): Session object.
            n (int | None): Parameter of the Painleve II equation.
            r (str | None): Potential as an expression in `z`.
            format (ReportFormat): Report format, `text` or `json`.

        Raises:
            DomainError: If not exactly one of `n` and `r` is given, or the format is unknown.
        """
        if (n is None) == (r is None):
            raise DomainError("Exactly one of n and r must be given")
        if format not in ("text", "json"):
            raise DomainError(f"Unknown report format {format!r}")
        if n is not None:
            problem = NVEBuilder.nve_potential(n, session.table)
            certificate = Kovacic.analyze(
                problem.r, problem, session.enumeration_limit
            )
        else:
            potential = parse_rational_expression(str(r))
            certificate = Kovacic.analyze(
                potential, enumeration_limit=session.enumeration_limit
            )
        session.logger.info(f"Verdict for r = {certificate.r}: {certificate.verdict}")
        session.emit(Report.from_certificate(certificate, format).body)
