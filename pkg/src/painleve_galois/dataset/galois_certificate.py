"""Machine-checkable record of a Kovacic case analysis."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, Union

from sympy import Rational

from painleve_galois.common.exceptions import SchemaValidationError
from painleve_galois.common.expression import (
    format_rational,
    parse_rational_expression,
)
from painleve_galois.common.polynomial import Polynomial
from painleve_galois.common.quotient_ring import QuotientRingElement
from painleve_galois.common.rational import format_rational_scalar, to_rational
from painleve_galois.common.schemas import validate_certificate_dict
from painleve_galois.dataset.singularity_profile import ExponentData, PoleClass

if TYPE_CHECKING:
    from typing_extensions import Self

    from painleve_galois.common.rational_function import RationalFunction
    from painleve_galois.common.types import (
        CaseStatus,
        DegreeFormula,
        StrategyName,
        StrategyOutcome,
        Verdict,
    )
    from painleve_galois.dataset.singularity_profile import RootValue


class _PairsDict(dict[str, Any]):
    """JSON object that remembers its key/value pairs, duplicates included."""

    def __init__(self: _PairsDict, items: list[tuple[str, Any]]) -> None:
        super().__init__(items)
        self.pairs = items


def _polynomial_from_text(text: str) -> Polynomial:
    value = parse_rational_expression(text)
    if not value.is_polynomial:
        raise SchemaValidationError(f"Expected a polynomial, got {text!r}")
    return value.numerator


def _root_value_to_text(value: RootValue | None) -> str | None:
    if value is None:
        return None
    if isinstance(value, QuotientRingElement):
        return f"{value.representative} mod {value.modulus}"
    return format_rational_scalar(value)


def _root_value_from_text(text: str | None) -> RootValue | None:
    if text is None:
        return None
    if " mod " in text:
        representative, modulus = text.split(" mod ")
        return QuotientRingElement(
            _polynomial_from_text(representative), _polynomial_from_text(modulus)
        )
    return to_rational(text)


def _optional_scalar(value: Rational | None) -> str | None:
    return None if value is None else format_rational_scalar(value)


def _optional_ints(values: tuple[int, ...] | None) -> list[str] | None:
    return None if values is None else [str(v) for v in values]


def _ints_from_strings(values: list[str] | None) -> tuple[int, ...] | None:
    return None if values is None else tuple(int(v) for v in values)


def _optional_int_text(value: int | None) -> str | None:
    return None if value is None else str(value)


def _optional_int(text: str | None) -> int | None:
    return None if text is None else int(text)


@dataclass(frozen=True)
class Candidate:
    """Exponent choice whose degree is a nonnegative integer.

    Attributes:
        class_exponents (tuple[tuple[Rational, ...], ...]): per class, the sorted exponents chosen at its roots
        infinity (Rational): exponent chosen at infinity
        formula (DegreeFormula): degree formula that produced `degree`
        degree (int): degree of the polynomial sought by the completion
        uniform (bool): every class uses a single exponent at all its roots
    """

    class_exponents: tuple[tuple[Rational, ...], ...]
    infinity: Rational
    formula: DegreeFormula
    degree: int
    uniform: bool

    def to_dict(self: Candidate) -> dict[str, Any]:
        """Serialize.

        Returns:
            dict[str, Any]: JSON-ready mapping
        """
        return {
            "class_exponents": [
                [format_rational_scalar(e) for e in exponents]
                for exponents in self.class_exponents
            ],
            "infinity": format_rational_scalar(self.infinity),
            "formula": self.formula,
            "degree": str(self.degree),
            "uniform": self.uniform,
        }

    @classmethod
    def from_dict(cls: type[Self], data: dict[str, Any]) -> Self:
        """Deserialize.

        Args:
            data (dict[str, Any]): mapping produced by `to_dict`

        Returns:
            Self: the candidate
        """
        return cls(
            class_exponents=tuple(
                tuple(to_rational(e) for e in exponents)
                for exponents in data["class_exponents"]
            ),
            infinity=to_rational(data["infinity"]),
            formula=data["formula"],
            degree=int(data["degree"]),
            uniform=data["uniform"],
        )


@dataclass(frozen=True)
class StrategyRecord:
    """Outcome of one enumeration strategy.

    Attributes:
        name (StrategyName): strategy
        outcome (StrategyOutcome): what it established
        examined (int): number of assignments or multisets looked at
    """

    name: StrategyName
    outcome: StrategyOutcome
    examined: int = 0


@dataclass(frozen=True)
class Case1Payload:
    """Rational solution `omega = omega_0 + P'/P` of `omega' + omega^2 = r`.

    Attributes:
        omega (RationalFunction): the Riccati solution
        polynomial (Polynomial): the monic polynomial `P`
        degree (int): degree of `P`
    """

    omega: RationalFunction
    polynomial: Polynomial
    degree: int


@dataclass(frozen=True)
class Case2Payload:
    """Completion `phi = theta + P'/P` of the imprimitive case.

    `omega` is then a root of `omega^2 - phi omega + (phi'/2 + phi^2/2 - r) = 0`.

    Attributes:
        theta (RationalFunction): `1/2 * sum e_c g'/g`
        polynomial (Polynomial): the monic polynomial `P`
        degree (int): degree of `P`
        phi (RationalFunction): `theta + P'/P`
    """

    theta: RationalFunction
    polynomial: Polynomial
    degree: int
    phi: RationalFunction


Payload = Union[Case1Payload, Case2Payload]


@dataclass(frozen=True)
class CaseResult:
    """Result of the search for one Kovacic case.

    Attributes:
        status (CaseStatus): success, excluded, undecided or not-attempted
        reasons (tuple[str, ...]): why the status was reached
        strategies (tuple[StrategyRecord, ...]): enumeration strategies that ran
        candidates (tuple[Candidate, ...]): exponent choices with an admissible degree
        payload (Payload | None): validated Liouvillian data on success
    """

    status: CaseStatus
    reasons: tuple[str, ...] = ()
    strategies: tuple[StrategyRecord, ...] = ()
    candidates: tuple[Candidate, ...] = ()
    payload: Payload | None = None

    def to_dict(self: CaseResult) -> dict[str, Any]:
        """Serialize.

        Returns:
            dict[str, Any]: JSON-ready mapping
        """
        payload: dict[str, Any] | None = None
        if isinstance(self.payload, Case1Payload):
            payload = {
                "omega": format_rational(self.payload.omega),
                "polynomial": str(self.payload.polynomial),
                "degree": str(self.payload.degree),
            }
        elif isinstance(self.payload, Case2Payload):
            payload = {
                "theta": format_rational(self.payload.theta),
                "polynomial": str(self.payload.polynomial),
                "degree": str(self.payload.degree),
                "phi": format_rational(self.payload.phi),
            }
        return {
            "status": self.status,
            "reasons": list(self.reasons),
            "strategies": [
                {"name": s.name, "outcome": s.outcome, "examined": str(s.examined)}
                for s in self.strategies
            ],
            "candidates": [c.to_dict() for c in self.candidates],
            "payload": payload,
        }

    @classmethod
    def from_dict(cls: type[Self], data: dict[str, Any]) -> Self:
        """Deserialize.

        Args:
            data (dict[str, Any]): mapping produced by `to_dict`

        Returns:
            Self: the case result
        """
        raw = data.get("payload")
        payload: Payload | None = None
        if raw is not None and "omega" in raw:
            payload = Case1Payload(
                omega=parse_rational_expression(raw["omega"]),
                polynomial=_polynomial_from_text(raw["polynomial"]),
                degree=int(raw["degree"]),
            )
        elif raw is not None:
            payload = Case2Payload(
                theta=parse_rational_expression(raw["theta"]),
                polynomial=_polynomial_from_text(raw["polynomial"]),
                degree=int(raw["degree"]),
                phi=parse_rational_expression(raw["phi"]),
            )
        return cls(
            status=data["status"],
            reasons=tuple(data.get("reasons", [])),
            strategies=tuple(
                StrategyRecord(s["name"], s["outcome"], int(s["examined"]))
                for s in data.get("strategies", [])
            ),
            candidates=tuple(Candidate.from_dict(c) for c in data.get("candidates", [])),
            payload=payload,
        )


@dataclass(frozen=True)
class CaseFilter:
    """Cases surviving the necessary conditions.

    Attributes:
        allowed (tuple[int, ...]): surviving cases among 1, 2 and 3
        reasons (tuple[str, ...]): one line per excluded case
        annotations (tuple[str, ...]): diagnostics reported without affecting the verdict
    """

    allowed: tuple[int, ...]
    reasons: tuple[str, ...] = ()
    annotations: tuple[str, ...] = ()


@dataclass(frozen=True)
class GaloisCertificate:
    """Complete record of the analysis of `y'' = r y`.

    The field names are those of the serialized form; profile fields are None only for
    the zero potential, which is settled before any profiling.
    """

    parameter_n: int | None
    r: RationalFunction
    pole_classes: tuple[PoleClass, ...]
    o_infinity_paper: int | None
    order_at_infinity: int | None
    m_plus: int | None
    gamma: int | None
    exponent_sets: ExponentData | None
    case_filter: CaseFilter
    case1: CaseResult | None
    case2: CaseResult | None
    verdict: Verdict
    conclusion: str | None = None

    def to_dict(self: GaloisCertificate) -> dict[str, Any]:
        """Serialize with fixed key order and exact numbers as strings.

        Returns:
            dict[str, Any]: JSON-ready mapping
        """
        exponent_sets: dict[str, Any] | None = None
        if self.exponent_sets is not None:
            exponent_sets = {
                "classes": [
                    {"factor": str(factor), "exponents": _optional_ints(exponents)}
                    for factor, exponents in self.exponent_sets.per_class
                ],
                "infinity": _optional_ints(self.exponent_sets.at_infinity),
                "infinity_classic": _optional_ints(
                    self.exponent_sets.at_infinity_classic
                ),
            }
        return {
            "parameter_n": _optional_int_text(self.parameter_n),
            "r": format_rational(self.r),
            "pole_classes": [
                {
                    "factor": str(c.factor),
                    "order": str(c.order),
                    "root_count": str(c.root_count),
                    "alpha": _root_value_to_text(c.alpha),
                    "beta": _root_value_to_text(c.beta),
                    "delta": _optional_scalar(c.delta),
                }
                for c in self.pole_classes
            ],
            "o_infinity_paper": _optional_int_text(self.o_infinity_paper),
            "order_at_infinity": _optional_int_text(self.order_at_infinity),
            "m_plus": _optional_int_text(self.m_plus),
            "gamma": _optional_int_text(self.gamma),
            "exponent_sets": exponent_sets,
            "case_filter": {
                "allowed": [str(case) for case in self.case_filter.allowed],
                "reasons": list(self.case_filter.reasons),
                "annotations": list(self.case_filter.annotations),
            },
            "case1": None if self.case1 is None else self.case1.to_dict(),
            "case2": None if self.case2 is None else self.case2.to_dict(),
            "verdict": self.verdict,
            "conclusion": self.conclusion,
        }

    @classmethod
    def from_dict(
        cls: type[Self], data: dict[str, Any] | list[tuple[str, Any]]
    ) -> Self:
        """Deserialize after validating the top-level fields against the schema.

        Args:
            data (dict[str, Any] | list[tuple[str, Any]]): mapping, or key/value pairs as read from JSON

        Returns:
            Self: the certificate
        """
        pairs = list(data.items()) if isinstance(data, dict) else data
        record = validate_certificate_dict(pairs)
        raw_sets = record.get("exponent_sets")
        exponent_sets = None
        if raw_sets is not None:
            exponent_sets = ExponentData(
                per_class=tuple(
                    (
                        _polynomial_from_text(entry["factor"]),
                        _ints_from_strings(entry["exponents"]),
                    )
                    for entry in raw_sets["classes"]
                ),
                at_infinity=_ints_from_strings(raw_sets["infinity"]),
                at_infinity_classic=_ints_from_strings(raw_sets["infinity_classic"]),
            )
        raw_filter = record["case_filter"]
        return cls(
            parameter_n=_optional_int(record.get("parameter_n")),
            r=parse_rational_expression(record["r"]),
            pole_classes=tuple(
                PoleClass(
                    factor=_polynomial_from_text(c["factor"]),
                    order=int(c["order"]),
                    root_count=int(c["root_count"]),
                    alpha=_root_value_from_text(c.get("alpha")),
                    beta=_root_value_from_text(c.get("beta")),
                    delta=None if c.get("delta") is None else to_rational(c["delta"]),
                )
                for c in record["pole_classes"]
            ),
            o_infinity_paper=_optional_int(record.get("o_infinity_paper")),
            order_at_infinity=_optional_int(record.get("order_at_infinity")),
            m_plus=_optional_int(record.get("m_plus")),
            gamma=_optional_int(record.get("gamma")),
            exponent_sets=exponent_sets,
            case_filter=CaseFilter(
                allowed=tuple(int(case) for case in raw_filter["allowed"]),
                reasons=tuple(raw_filter.get("reasons", [])),
                annotations=tuple(raw_filter.get("annotations", [])),
            ),
            case1=None
            if record.get("case1") is None
            else CaseResult.from_dict(record["case1"]),
            case2=None
            if record.get("case2") is None
            else CaseResult.from_dict(record["case2"]),
            verdict=record["verdict"],
            conclusion=record.get("conclusion"),
        )

    def to_json(self: GaloisCertificate) -> str:
        """JSON text of `to_dict`.

        Returns:
            str: indented JSON
        """
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls: type[Self], text: str) -> Self:
        """Read a certificate written by `to_json`.

        Args:
            text (str): JSON text

        Returns:
            Self: the certificate

        Raises:
            SchemaValidationError: when the text is not a JSON object
        """
        document = json.loads(text, object_pairs_hook=_PairsDict)
        if not isinstance(document, _PairsDict):
            raise SchemaValidationError("A certificate must be a JSON object")
        return cls.from_dict(document.pairs)
