"""Exception hierarchy shared by all Tentpole modules."""

from typing import Any


def _fmt(value: Any) -> str:
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple) and len(value) == 2:
        return f"{value[0]}-{value[1]}"
    return str(value).replace(" ", "")


class TentpoleError(Exception):
    """Base class for all Tentpole errors."""

    code = "error"

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details

    def reason(self) -> str:
        """Render the one-line, machine-parsable form used on stderr."""
        parts = [f"error code={self.code}"]
        for key, value in self.details.items():
            if value is not None:
                parts.append(f"{key}={_fmt(value)}")
        parts.append(f"message={str(self).replace(' ', '_')}")
        return " ".join(parts)


class MathematicalFailure(TentpoleError):
    """The input is well-formed but the mathematics does not go through."""

    code = "math"


class InputError(TentpoleError):
    """The input is malformed."""

    code = "input"


class RootFindingError(MathematicalFailure):
    """Raised when root extraction does not reproduce the polynomial."""

    code = "root_finding"

    def __init__(self, message: str, residual: float):
        super().__init__(message, residual=residual)
        self.residual = residual


class NotNonnegative(MathematicalFailure):
    """Raised when a function dips below zero beyond tolerance.

    The witness is the location where the negative value was observed: an
    edge parameter, a vertex, or a bare interval point.
    """

    code = "not_nonnegative"

    def __init__(
        self,
        message: str,
        value: float,
        point: float | None = None,
        edge: tuple[int, int] | None = None,
        vertex: int | None = None,
    ):
        super().__init__(message, edge=edge, vertex=vertex, t=point, value=value)
        self.value = value
        self.point = point
        self.edge = edge
        self.vertex = vertex


class BoundaryInfeasible(MathematicalFailure):
    """Raised when a prescribed boundary value exceeds the square root bound."""

    code = "boundary_infeasible"

    def __init__(self, message: str, end: int, value: float, bound: float):
        super().__init__(message, end=end, value=value, bound=bound)
        self.end = end
        self.value = value
        self.bound = bound


class RemainderNegative(MathematicalFailure):
    """Raised when a running remainder loses nonnegativity numerically."""

    code = "remainder_negative"

    def __init__(self, message: str, step: int, value: float, point: float):
        super().__init__(message, step=step, t=point, value=value)
        self.step = step
        self.value = value
        self.point = point


class SosConstructionError(MathematicalFailure):
    """Raised when a constructed representation does not reproduce its input."""

    code = "sos_residual"

    def __init__(self, message: str, residual: float):
        super().__init__(message, residual=residual)
        self.residual = residual


class CertificationError(MathematicalFailure):
    """Raised when a numerical failure happens inside a peeling step."""

    code = "certification"

    def __init__(self, message: str, edge: tuple[int, int] | None, cause: TentpoleError):
        super().__init__(message, edge=edge, cause=cause.code)
        self.edge = edge
        self.cause = cause


class MalformedComplex(InputError):
    """Raised when a complex has duplicate edges, loops or bad indices."""

    code = "malformed_complex"

    def __init__(self, message: str, errors: list[str] | None = None):
        super().__init__(message)
        self.errors = errors or []


class IncompatibleVertexValues(InputError):
    """Raised when edge polynomials disagree at a shared vertex."""

    code = "incompatible_vertex"

    def __init__(self, message: str, vertex: int, values: tuple[float, float]):
        super().__init__(message, vertex=vertex, values=f"{values[0]!r},{values[1]!r}")
        self.vertex = vertex
        self.values = values


class GlueMismatch(InputError):
    """Raised when two pieces disagree at a vertex they share."""

    code = "glue_mismatch"

    def __init__(self, message: str, vertex: int, values: tuple[float, float]):
        super().__init__(message, vertex=vertex, values=f"{values[0]!r},{values[1]!r}")
        self.vertex = vertex
        self.values = values


class ComplexMismatch(InputError):
    """Raised when operands live on different complexes."""

    code = "complex_mismatch"


class ValidationError(InputError):
    """Raised when a document fails schema or semantic validation."""

    code = "validation"

    def __init__(self, message: str, errors: list[str] | None = None):
        super().__init__(message)
        self.errors = errors or []
