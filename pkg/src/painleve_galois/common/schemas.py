"""Methods for handling record schemas."""

from __future__ import annotations

import importlib.resources as pkg_resources
import json
from collections import namedtuple
from typing import Any

from painleve_galois.assets import schemas
from painleve_galois.common.exceptions import SchemaValidationError

Field = namedtuple("Field", ["name", "type", "nullable"])

_PYTHON_TYPES: dict[str, type | tuple[type, ...]] = {
    "integer": int,
    "string": str,
    "array": list,
    "object": dict,
}


def parse_schema(schema_json: str) -> list[Field]:
    """Parse a record schema from JSON.

    Args:
        schema_json (str): JSON filename containing the schema in the schemas package

    Returns:
        list[Field]: declared top-level fields, in order

    Examples:
        >>> [f.name for f in parse_schema("galois_certificate.json")][:3]
        ['parameter_n', 'r', 'pole_classes']
    """
    core_schema = json.loads(
        pkg_resources.read_text(schemas, schema_json, encoding="utf-8")
    )
    return [
        Field(field["name"], field["type"], field["nullable"])
        for field in core_schema["fields"]
    ]


def _matches(value: Any, type_name: str) -> bool:
    if type_name == "integer" and isinstance(value, bool):
        return False
    return isinstance(value, _PYTHON_TYPES[type_name])


def validate_record(pairs: list[tuple[str, Any]], schema_json: str) -> dict[str, Any]:
    """Validate the top-level key/value pairs of a record against its schema.

    Pairs rather than a dict are taken so that duplicated keys can be detected.

    Args:
        pairs (list[tuple[str, Any]]): key/value pairs in document order
        schema_json (str): schema filename

    Returns:
        dict[str, Any]: the record as a dict

    Raises:
        SchemaValidationError: on unexpected, missing, duplicated or mistyped fields
    """
    expected_fields = parse_schema(schema_json)
    expected_names = [field.name for field in expected_fields]
    observed_names = [name for name, _ in pairs]

    # Unexpected fields in record
    if unexpected_field_names := [x for x in observed_names if x not in expected_names]:
        raise SchemaValidationError(
            f"The {unexpected_field_names} fields are not included in the record schema: {expected_names}"
        )

    # Fields with duplicated names
    if duplicated_fields := sorted(
        {x for x in observed_names if observed_names.count(x) > 1}
    ):
        raise SchemaValidationError(
            f"The following fields are duplicated in the record: {duplicated_fields}"
        )

    record = dict(pairs)

    # Required fields not in record
    required_fields = [x.name for x in expected_fields if not x.nullable]
    if missing_required_fields := [
        req for req in required_fields if record.get(req) is None
    ]:
        raise SchemaValidationError(
            f"The {missing_required_fields} fields are required but missing: {required_fields}"
        )

    # Fields with different datatype
    if fields_with_different_observed_datatype := [
        field.name
        for field in expected_fields
        if record.get(field.name) is not None
        and not _matches(record[field.name], field.type)
    ]:
        raise SchemaValidationError(
            f"The following fields present differences in their datatypes: {fields_with_different_observed_datatype}."
        )
    return record


def validate_certificate_dict(pairs: list[tuple[str, Any]]) -> dict[str, Any]:
    """Validate a serialized certificate.

    Args:
        pairs (list[tuple[str, Any]]): top-level key/value pairs

    Returns:
        dict[str, Any]: the certificate dict
    """
    return validate_record(pairs, "galois_certificate.json")
