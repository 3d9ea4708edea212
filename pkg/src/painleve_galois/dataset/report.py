"""Rendered reports: certificates as text or JSON, and the certification summary."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

from painleve_galois.common.exceptions import SchemaValidationError
from painleve_galois.dataset.galois_certificate import GaloisCertificate

if TYPE_CHECKING:
    from collections.abc import Sequence

    from painleve_galois.common.types import ReportFormat
    from painleve_galois.dataset.galois_certificate import CaseResult

SUMMARY_HEADER = ("n", "gamma", "verdict")


def _set_text(values: Sequence[Any] | None) -> str:
    if values is None:
        return "undetermined"
    return "{" + ", ".join(str(v) for v in values) + "}"


def _case_lines(label: str, result: CaseResult | None) -> list[str]:
    if result is None:
        return [f"{label}: not applicable"]
    lines = [f"{label}: {result.status}"]
    lines.extend(f"  {reason}" for reason in result.reasons)
    for strategy in result.strategies:
        line = f"  strategy {strategy.name}: {strategy.outcome}"
        if strategy.examined:
            line += f" ({strategy.examined} examined)"
        lines.append(line)
    if result.candidates:
        lines.append(f"  candidates: {len(result.candidates)}")
    if result.payload is not None:
        for key, value in result.to_dict()["payload"].items():
            lines.append(f"  {key} = {value}")
    return lines


def render_text(certificate: GaloisCertificate) -> str:
    """Human-readable rendering of a certificate.

    It is built from `GaloisCertificate.to_dict`, so both report formats show the same
    values.

    Args:
        certificate (GaloisCertificate): certificate to render

    Returns:
        str: multi-line text
    """
    data = certificate.to_dict()
    lines = []
    if data["parameter_n"] is not None:
        lines.append(f"n = {data['parameter_n']}")
    lines.append(f"r = {data['r']}")
    if data["pole_classes"]:
        lines.append("pole classes:")
        for c in data["pole_classes"]:
            line = f"  {c['factor']}: order {c['order']}, {c['root_count']} root(s)"
            for key in ("alpha", "beta", "delta"):
                if c[key] is not None:
                    line += f", {key} = {c[key]}"
            lines.append(line)
    else:
        lines.append("pole classes: none")
    if data["order_at_infinity"] is not None:
        lines.append(
            f"infinity: order {data['order_at_infinity']}, o_infinity_paper {data['o_infinity_paper']}"
        )
        lines.append(f"m_plus = {data['m_plus']}, gamma = {data['gamma']}")
    sets = data["exponent_sets"]
    if sets is not None:
        lines.append("exponent sets:")
        for entry in sets["classes"]:
            lines.append(f"  {entry['factor']}: {_set_text(entry['exponents'])}")
        lines.append(
            f"  infinity: {_set_text(sets['infinity'])}, classic {_set_text(sets['infinity_classic'])}"
        )
    case_filter = certificate.case_filter
    lines.append(f"allowed cases: {_set_text(case_filter.allowed)}")
    lines.extend(f"  {reason}" for reason in case_filter.reasons)
    lines.extend(f"  note: {note}" for note in case_filter.annotations)
    lines.extend(_case_lines("case 1", certificate.case1))
    lines.extend(_case_lines("case 2", certificate.case2))
    lines.append(f"verdict: {certificate.verdict}")
    if certificate.conclusion is not None:
        lines.append(certificate.conclusion)
    return "\n".join(lines)


def summary_row(certificate: GaloisCertificate) -> dict[str, Any]:
    """Summary entry of one certificate.

    Args:
        certificate (GaloisCertificate): certificate

    Returns:
        dict[str, Any]: `n`, `gamma` (None without finite poles) and `verdict`
    """
    return {
        "n": certificate.parameter_n,
        "gamma": certificate.gamma if certificate.pole_classes else None,
        "verdict": certificate.verdict,
    }


def summary_table(rows: Sequence[dict[str, Any]]) -> str:
    """Fixed-width table with columns n, gamma and verdict.

    Args:
        rows (Sequence[dict[str, Any]]): entries produced by `summary_row`

    Returns:
        str: table text, `-` standing for a missing gamma

    Examples:
        >>> print(summary_table([{"n": 0, "gamma": None, "verdict": "SL2"}, {"n": 1, "gamma": 2, "verdict": "SL2"}]))
           n  gamma  verdict
           0      -  SL2
           1      2  SL2
    """
    lines = [f"{SUMMARY_HEADER[0]:>4}  {SUMMARY_HEADER[1]:>5}  {SUMMARY_HEADER[2]}"]
    for row in rows:
        gamma = "-" if row["gamma"] is None else str(row["gamma"])
        lines.append(f"{row['n']!s:>4}  {gamma:>5}  {row['verdict']}")
    return "\n".join(lines)


@dataclass(frozen=True)
class Report:
    """Rendered output of a subcommand.

    Attributes:
        format (ReportFormat): `text` or `json`
        body (str): rendered text
    """

    format: ReportFormat
    body: str

    @classmethod
    def from_certificate(
        cls: type[Report], certificate: GaloisCertificate, format: ReportFormat
    ) -> Report:
        """Render one certificate.

        Args:
            certificate (GaloisCertificate): certificate
            format (ReportFormat): output format

        Returns:
            Report: rendered report
        """
        body = certificate.to_json() if format == "json" else render_text(certificate)
        return cls(format=format, body=body)

    @classmethod
    def from_certificates(
        cls: type[Report],
        certificates: Sequence[GaloisCertificate],
        format: ReportFormat,
    ) -> Report:
        """Render a range of certificates.

        The JSON form is `{"certificates": [...], "summary": [...]}`; the text form is the
        summary table.

        Args:
            certificates (Sequence[GaloisCertificate]): certificates ordered by parameter
            format (ReportFormat): output format

        Returns:
            Report: rendered report
        """
        rows = [summary_row(c) for c in certificates]
        if format == "json":
            document = {
                "certificates": [c.to_dict() for c in certificates],
                "summary": rows,
            }
            return cls(
                format=format,
                body=json.dumps(document, indent=2, ensure_ascii=False),
            )
        return cls(format=format, body=summary_table(rows))


def parse_report(text: str) -> GaloisCertificate:
    """Read a JSON certificate report back.

    Args:
        text (str): body of a JSON report

    Returns:
        GaloisCertificate: the certificate

    Raises:
        SchemaValidationError: when the text is not JSON
    """
    try:
        return GaloisCertificate.from_json(text)
    except json.JSONDecodeError as exc:
        raise SchemaValidationError(f"Report is not valid JSON: {exc.msg}") from exc
