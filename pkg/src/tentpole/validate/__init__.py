"""Schema validation utilities."""

from tentpole.errors import ValidationError
from tentpole.validate.registry import SchemaRegistry, get_registry, set_registry
from tentpole.validate.validate import validate_document

__all__ = [
    "SchemaRegistry",
    "get_registry",
    "set_registry",
    "validate_document",
    "ValidationError",
]
