"""Dense univariate polynomials in ascending coefficient order."""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Any

import numpy as np
import numpy.polynomial.polynomial as npp

# Degree reported by the zero polynomial; compares below every integer.
NEG_INF_DEGREE = -math.inf

# Relative threshold for dropping top coefficients after arithmetic.
TRIM = 1e-12

Scalar = float | complex | Fraction


def _as_array(values: Iterable[Any]) -> np.ndarray:
    items = list(values)
    if any(isinstance(v, Fraction) for v in items):
        return np.array([Fraction(v) for v in items], dtype=object)
    if any(isinstance(v, complex | np.complexfloating) for v in items):
        return np.array(items, dtype=np.complex128)
    return np.array(items, dtype=np.float64)


def _trim(coeffs: np.ndarray, rel: float) -> np.ndarray:
    if coeffs.size == 0:
        return coeffs
    if coeffs.dtype == object:
        nz = [i for i, c in enumerate(coeffs) if c != 0]
        return coeffs[: nz[-1] + 1] if nz else coeffs[:0]
    mags = np.abs(coeffs)
    cutoff = rel * float(mags.max())
    keep = np.flatnonzero(mags > cutoff)
    return coeffs[: keep[-1] + 1] if keep.size else coeffs[:0]


@dataclass(frozen=True, eq=False)
class Poly:
    """A univariate polynomial ``sum_k coeffs[k] * t**k``.

    Coefficients are float64, complex128, or (for the exact verification
    path) Python ``Fraction`` objects in an object array. Instances are
    immutable and always trimmed: the top coefficient is nonzero unless the
    polynomial is zero, in which case ``coeffs`` is empty.
    """

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        self.coeffs.setflags(write=False)

    @classmethod
    def of(cls, values: Iterable[Any] | np.ndarray, rel_trim: float = TRIM) -> "Poly":
        """Build a trimmed polynomial from ascending coefficients."""
        arr = values.copy() if isinstance(values, np.ndarray) else _as_array(values)
        if arr.dtype.kind in "biu":
            arr = arr.astype(np.float64)
        return cls(_trim(arr, rel_trim))

    @classmethod
    def zero(cls) -> "Poly":
        return cls(np.zeros(0, dtype=np.float64))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls.of([c])

    @classmethod
    def t(cls, exact: bool = False) -> "Poly":
        """The identity polynomial ``t``."""
        if exact:
            return cls.of([Fraction(0), Fraction(1)])
        return cls.of([0.0, 1.0])

    @classmethod
    def linear_interpolant(cls, left: Scalar, right: Scalar) -> "Poly":
        """Degree <= 1 polynomial with values ``left`` at -1 and ``right`` at 1."""
        if isinstance(left, Fraction) or isinstance(right, Fraction):
            half = Fraction(1, 2)
            return cls.of([half * (Fraction(left) + right), half * (Fraction(right) - left)])
        return cls.of([0.5 * (left + right), 0.5 * (right - left)])

    # -- properties -----------------------------------------------------

    @property
    def degree(self) -> float:
        """Degree as an int, or ``NEG_INF_DEGREE`` for the zero polynomial."""
        return len(self.coeffs) - 1 if len(self.coeffs) else NEG_INF_DEGREE

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    @property
    def is_exact(self) -> bool:
        return self.coeffs.dtype == object

    @property
    def is_real(self) -> bool:
        return self.coeffs.dtype != np.complex128

    @property
    def lead(self) -> Scalar:
        return self.coeffs[-1] if len(self.coeffs) else 0.0

    def norm(self) -> float:
        """Sup norm of the coefficient vector."""
        if self.is_zero:
            return 0.0
        if self.is_exact:
            return float(max(abs(c) for c in self.coeffs))
        return float(np.abs(self.coeffs).max())

    # -- conversions ----------------------------------------------------

    def to_exact(self) -> "Poly":
        return Poly.of([Fraction(c) for c in self.coeffs]) if not self.is_exact else self

    def to_float(self) -> "Poly":
        if self.is_exact:
            return Poly.of(np.array([float(c) for c in self.coeffs], dtype=np.float64))
        return self

    @property
    def real(self) -> "Poly":
        return Poly.of(np.real(self.coeffs).astype(np.float64)) if not self.is_real else self

    def chop(self, tol: float) -> "Poly":
        """Zero out every coefficient with absolute value at most ``tol``."""
        if self.is_exact or self.is_zero:
            return self
        c = self.coeffs.copy()
        c[np.abs(c) <= tol] = 0
        return Poly.of(c, rel_trim=0.0)

    # -- arithmetic -----------------------------------------------------

    def _binary(self, other: "Poly | Number", sign: int) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.constant(other)  # type: ignore[arg-type]
        n = max(len(self.coeffs), len(other.coeffs))
        dtype = np.result_type(self.coeffs.dtype, other.coeffs.dtype)
        a = np.zeros(n, dtype=dtype)
        b = np.zeros(n, dtype=dtype)
        a[: len(self.coeffs)] = self.coeffs
        b[: len(other.coeffs)] = other.coeffs
        return Poly.of(a + b if sign > 0 else a - b)

    def __add__(self, other: "Poly | Number") -> "Poly":
        return self._binary(other, 1)

    __radd__ = __add__

    def __sub__(self, other: "Poly | Number") -> "Poly":
        return self._binary(other, -1)

    def __rsub__(self, other: "Poly | Number") -> "Poly":
        return (-self) + other

    def __neg__(self) -> "Poly":
        return Poly.of(-self.coeffs, rel_trim=0.0)

    def __mul__(self, other: "Poly | Number") -> "Poly":
        if not isinstance(other, Poly):
            return scale(self, other)  # type: ignore[arg-type]
        if self.is_zero or other.is_zero:
            return Poly.zero()
        if self.is_exact or other.is_exact:
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return Poly.of(out)
        return Poly.of(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        result = Poly.constant(Fraction(1) if self.is_exact else 1.0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: Any) -> Any:
        return evaluate(self, x)

    def conj(self) -> "Poly":
        return Poly.of(np.conj(self.coeffs)) if not self.is_real else self

    def derivative(self) -> "Poly":
        if len(self.coeffs) <= 1:
            return Poly.zero()
        return Poly.of(npp.polyder(self.coeffs))

    def reflect(self) -> "Poly":
        """The polynomial ``t -> p(-t)``."""
        signs = np.array([(-1) ** k for k in range(len(self.coeffs))], dtype=np.int64)
        if self.is_exact:
            return Poly.of([c * int(s) for c, s in zip(self.coeffs, signs)])
        return Poly.of(self.coeffs * signs, rel_trim=0.0)

    def divmod_weight(self) -> tuple["Poly", "Poly"]:
        """Divide by the interval weight ``1 - t**2``.

        Returns:
            ``(quotient, remainder)`` with ``self = quotient*(1-t**2) + remainder``
            and ``deg(remainder) <= 1``.
        """
        if len(self.coeffs) < 3:
            return Poly.zero(), self
        c = list(self.coeffs)
        quo = [c[0] * 0] * (len(c) - 2)
        # t^k = t^(k-2) - t^(k-2) (1 - t^2)
        for k in range(len(c) - 1, 1, -1):
            quo[k - 2] = -c[k]
            c[k - 2] = c[k - 2] + c[k]
        return Poly.of(quo), Poly.of(c[:2])

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


def add(p: Poly, q: Poly) -> Poly:
    """Sum of two polynomials."""
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    """Product of two polynomials."""
    return p * q


def scale(p: Poly, c: Scalar) -> Poly:
    """Multiply every coefficient by ``c``."""
    if p.is_zero or c == 0:
        return Poly.zero()
    if p.is_exact or isinstance(c, Fraction):
        return Poly.of([Fraction(x) * c if isinstance(c, Fraction) else x * c for x in p.coeffs])
    return Poly.of(p.coeffs * c)


def evaluate(p: Poly, x: Any) -> Any:
    """Evaluate ``p`` at a scalar or array by nested multiplication."""
    if p.is_zero:
        return 0 * x if not isinstance(x, list) else np.zeros(len(x))
    if p.is_exact and isinstance(x, Fraction | int):
        acc: Any = Fraction(0)
        for c in reversed(p.coeffs):
            acc = acc * x + c
        return acc
    return npp.polyval(x, p.to_float().coeffs if p.is_exact else p.coeffs)


def sup_distance(p: Poly, q: Poly) -> Any:
    """Largest absolute coefficient difference of ``p`` and ``q``."""
    diff = (p - q).coeffs
    if len(diff) == 0:
        return 0
    if diff.dtype == object:
        return max(abs(c) for c in diff)
    return float(np.abs(diff).max())


def from_roots(roots: Sequence[complex], lead: Scalar = 1.0) -> Poly:
    """The polynomial ``lead * prod(t - root)``."""
    if not len(roots):
        return Poly.constant(lead)
    return Poly.of(npp.polyfromroots(np.asarray(roots, dtype=np.complex128)) * lead)


def sum_of_squares(parts: Iterable[Poly]) -> Poly:
    """``sum(p**2 for p in parts)``."""
    total = Poly.zero()
    for p in parts:
        total = total + p * p
    return total
