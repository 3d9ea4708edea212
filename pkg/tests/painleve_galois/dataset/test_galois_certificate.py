"""Test the Galois certificate record and its serialized form."""

from __future__ import annotations

import json

import pytest

from painleve_galois.common.exceptions import SchemaValidationError
from painleve_galois.common.quotient_ring import QuotientRingElement
from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.dataset.galois_certificate import (
    Candidate,
    Case1Payload,
    GaloisCertificate,
)
from painleve_galois.method.kovacic import Kovacic

KEY_ORDER = [
    "parameter_n",
    "r",
    "pole_classes",
    "o_infinity_paper",
    "order_at_infinity",
    "m_plus",
    "gamma",
    "exponent_sets",
    "case_filter",
    "case1",
    "case2",
    "verdict",
    "conclusion",
]


class TestSerialization:
    """Test the JSON form."""

    def test_key_order(
        self: TestSerialization, certificate_n1: GaloisCertificate
    ) -> None:
        """Top-level keys come in a fixed order."""
        assert list(json.loads(certificate_n1.to_json())) == KEY_ORDER

    def test_exact_values_are_strings(
        self: TestSerialization, certificate_n1: GaloisCertificate
    ) -> None:
        """Exact numbers and counts are all strings."""
        data = certificate_n1.to_dict()
        pole_class = data["pole_classes"][0]
        assert pole_class == {
            "factor": "z",
            "order": "2",
            "root_count": "1",
            "alpha": "6",
            "beta": "0",
            "delta": "5",
        }
        assert data["exponent_sets"]["classes"][0]["exponents"] == ["-8", "2", "12"]
        assert data["exponent_sets"]["infinity"] == ["5"]
        assert data["r"] == "(z^3 + 6)/z^2"
        assert [
            data[key]
            for key in ("parameter_n", "o_infinity_paper", "order_at_infinity", "m_plus", "gamma")
        ] == ["1", "5", "-1", "5", "2"]
        assert data["case_filter"]["allowed"] == ["2"]

    def test_no_json_numbers(
        self: TestSerialization, certificate_case1: GaloisCertificate
    ) -> None:
        """Degrees and enumeration counts are strings as well."""

        def numbers(value: object) -> list[object]:
            if isinstance(value, dict):
                return [n for v in value.values() for n in numbers(v)]
            if isinstance(value, list):
                return [n for v in value for n in numbers(v)]
            return [value] if isinstance(value, (int, float)) and not isinstance(value, bool) else []

        data = certificate_case1.to_dict()
        assert data["case1"]["payload"]["degree"] == "0"
        assert numbers(data) == []

    def test_round_trip_sl2(
        self: TestSerialization, certificate_n1: GaloisCertificate
    ) -> None:
        """A certificate read back from JSON equals the original."""
        assert GaloisCertificate.from_json(certificate_n1.to_json()) == certificate_n1

    def test_round_trip_with_payload(
        self: TestSerialization, certificate_case1: GaloisCertificate
    ) -> None:
        """Payloads and candidates survive the round trip."""
        restored = GaloisCertificate.from_json(certificate_case1.to_json())
        assert restored == certificate_case1
        assert isinstance(restored.case1.payload, Case1Payload)
        assert all(isinstance(c, Candidate) for c in restored.case1.candidates)

    def test_round_trip_with_root_dependent_alpha(
        self: TestSerialization, z: RationalFunction
    ) -> None:
        """Laurent data that differ between conjugate roots are kept as residue classes."""
        certificate = Kovacic.analyze(z / (z**2 - 2) ** 2)
        assert isinstance(certificate.pole_classes[0].alpha, QuotientRingElement)
        restored = GaloisCertificate.from_json(certificate.to_json())
        assert restored == certificate
        assert certificate.to_dict()["pole_classes"][0]["alpha"] == "z/8 mod z^2 - 2"


class TestValidation:
    """Test that malformed documents are rejected."""

    def test_not_an_object(self: TestValidation) -> None:
        """A JSON array is not a certificate."""
        with pytest.raises(SchemaValidationError):
            GaloisCertificate.from_json("[]")

    def test_duplicated_key(
        self: TestValidation, certificate_n1: GaloisCertificate
    ) -> None:
        """Repeated top-level keys are detected before they collapse."""
        text = certificate_n1.to_json().replace(
            '"verdict": "SL2"', '"verdict": "SL2",\n  "verdict": "SL2"'
        )
        with pytest.raises(SchemaValidationError, match="duplicated"):
            GaloisCertificate.from_json(text)

    def test_missing_verdict(
        self: TestValidation, certificate_n1: GaloisCertificate
    ) -> None:
        """A certificate without a verdict is incomplete."""
        data = certificate_n1.to_dict()
        del data["verdict"]
        with pytest.raises(SchemaValidationError, match="required but missing"):
            GaloisCertificate.from_dict(data)

    def test_mistyped_field(
        self: TestValidation, certificate_n1: GaloisCertificate
    ) -> None:
        """Counts must be exact strings."""
        data = certificate_n1.to_dict()
        data["gamma"] = 2
        with pytest.raises(SchemaValidationError, match="datatypes"):
            GaloisCertificate.from_dict(data)
