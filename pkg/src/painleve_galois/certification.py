"""Step to certify a range of parameters."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from functools import partial

from painleve_galois.common.exceptions import DomainError
from painleve_galois.common.session import Session
from painleve_galois.common.types import ReportFormat
from painleve_galois.dataset.galois_certificate import GaloisCertificate
from painleve_galois.dataset.report import Report
from painleve_galois.dataset.vorobev_yablonski import VorobevYablonskiTable
from painleve_galois.method.kovacic import Kovacic
from painleve_galois.method.nve_builder import NVEBuilder


def certify_parameter(
    n: int, table: VorobevYablonskiTable, enumeration_limit: int
) -> GaloisCertificate:
    """Certificate of the normal variational equation along `w(z, n)`.

    Args:
        n (int): parameter
        table (VorobevYablonskiTable): polynomial table
        enumeration_limit (int): largest exhaustive enumeration

    Returns:
        GaloisCertificate: the certificate
    """
    problem = NVEBuilder.nve_potential(n, table)
    return Kovacic.analyze(problem.r, problem, enumeration_limit)


def _certify_in_worker(n: int, max_n: int, enumeration_limit: int) -> str:
    certificate = certify_parameter(
        n, VorobevYablonskiTable(max_n=max_n), enumeration_limit
    )
    return certificate.to_json()


class CertificationStep:
    """Certification step.

    Analyses every parameter of a range and prints the summary table (n, gamma, verdict).
    Parameters are independent, so `parallel` spreads them over processes; results are
    merged by parameter and the output does not depend on it.
    """

    def __init__(
        self,
        session: Session,
        from_n: int,
        to_n: int,
        out: str | None = None,
        parallel: bool = False,
        format: ReportFormat = "text",
    ) -> None:
        """Run certification step.

        Args:
            session (Session): Session object.
            from_n (int): First parameter.
            to_n (int): Last parameter, included.
            out (str | None): Path of the JSON document with every certificate and the summary.
            parallel (bool): Whether to analyse parameters in separate processes.
            format (ReportFormat): Format of the report printed to stdout.

        Raises:
            DomainError: If the range is empty or the format is unknown.
        """
        if from_n > to_n:
            raise DomainError(f"Empty parameter range {from_n}..{to_n}")
        if format not in ("text", "json"):
            raise DomainError(f"Unknown report format {format!r}")
        parameters = range(from_n, to_n + 1)
        for n in parameters:
            session.table.check_index(abs(n) + 1)

        if parallel:
            worker = partial(
                _certify_in_worker,
                max_n=session.max_n,
                enumeration_limit=session.enumeration_limit,
            )
            with ProcessPoolExecutor() as executor:
                certificates = [
                    GaloisCertificate.from_json(text)
                    for text in executor.map(worker, parameters)
                ]
        else:
            certificates = [
                certify_parameter(n, session.table, session.enumeration_limit)
                for n in parameters
            ]
        for certificate in certificates:
            session.logger.info(
                f"n = {certificate.parameter_n}: {certificate.verdict}"
            )

        if out is not None:
            session.emit(Report.from_certificates(certificates, "json").body, out)
        session.emit(Report.from_certificates(certificates, format).body)
