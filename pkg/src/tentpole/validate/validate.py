"""Schema validation of Tentpole documents."""

from typing import Any

from jsonschema import Draft7Validator

from tentpole.errors import ValidationError
from tentpole.validate.registry import SCHEMA_VERSION, get_registry


def validate_document(data: Any, name: str, version: str = SCHEMA_VERSION) -> None:
    """Validate a parsed JSON document against the ``name`` schema.

    Args:
        data: The document
        name: Document kind
        version: Schema version to validate against

    Raises:
        ValidationError: If the schema is unknown or the document violates it;
            ``errors`` holds one ``path: message`` line per violation
    """
    try:
        schema = get_registry().get_schema(name, version)
    except FileNotFoundError:
        raise ValidationError(f"Unknown document kind: {name}")

    validator = Draft7Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(map(str, e.path)))

    if errors:
        error_messages = []
        for error in errors:
            path = ".".join(str(p) for p in error.path) if error.path else "(root)"
            error_messages.append(f"{path}: {error.message}")

        raise ValidationError(
            f"{name.capitalize()} validation failed with {len(errors)} error(s): "
            f"{error_messages[0]}",
            errors=error_messages,
        )
