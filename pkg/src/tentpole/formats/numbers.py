"""Scalar literals in documents.

Documents are parsed with JSON floats kept as ``Decimal`` so that exactness
can be decided once the whole document has been read: integers and
``"p/q"`` strings are rational, anything written with a decimal point or an
exponent is a float.
"""

import json
import math
from decimal import Decimal
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from tentpole.errors import ValidationError

Literal = int | Decimal | str


def load_json(path: Path) -> Any:
    """Read a JSON document, keeping floats as ``Decimal``.

    Raises:
        ValidationError: If the file cannot be read or is not valid JSON
    """
    try:
        with open(path) as f:
            return json.load(f, parse_float=Decimal)
    except FileNotFoundError:
        raise ValidationError(f"File not found: {path}")
    except OSError as exc:
        raise ValidationError(f"Cannot read {path}: {exc.strerror}", errors=[str(exc)])
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ValidationError(f"Malformed JSON in {path}: {exc}", errors=[str(exc)])


def is_rational(x: Literal) -> bool:
    return not isinstance(x, Decimal)


def to_scalar(x: Literal, exact: bool) -> Fraction | float:
    """Convert a literal; ``exact`` requests a ``Fraction``."""
    if exact:
        return Fraction(x)
    return float(Fraction(x)) if isinstance(x, str) else float(x)


def render(x: Any) -> Any:
    """The JSON form of a scalar: ints and floats as numbers, rationals as ``"p/q"``."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, bool | np.bool_):
        return bool(x)
    if isinstance(x, int | np.integer):
        return int(x)
    value = float(x)
    if not math.isfinite(value):
        raise ValueError(f"cannot serialise non-finite value {value!r}")
    return value + 0.0
