"""Reading and writing complex, function and certificate documents."""

import json
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

from tentpole.certify import Certificate, QmTerm
from tentpole.errors import InputError, TentpoleError, ValidationError
from tentpole.formats.numbers import is_rational, load_json, render, to_scalar
from tentpole.poly import Poly
from tentpole.pwpoly import PiecewisePoly, TentPoly, from_tent, make, to_tent
from tentpole.settings import ToleranceSettings
from tentpole.simplicial import Complex1D, edge_key, parse_edge_key, validate
from tentpole.validate import validate_document

logger = logging.getLogger(__name__)

OutputFormat = Literal["edge", "tent"]


@dataclass(frozen=True)
class Loaded:
    """A parsed document and whether every number in it was rational."""

    value: Any
    exact: bool


# -- scanning --------------------------------------------------------------


def _literals(body: Any) -> Iterator[Any]:
    if isinstance(body, dict):
        for key, value in body.items():
            if key not in ("complex", "meta"):
                yield from _literals(value)
    elif isinstance(body, list):
        for item in body:
            yield from _literals(item)
    elif not isinstance(body, bool):
        yield body


def _is_exact(body: Any) -> bool:
    return all(is_rational(x) for x in _literals(body))


# -- complexes -------------------------------------------------------------


def parse_complex(data: Any) -> Complex1D:
    """Build a complex from its document form.

    Raises:
        ValidationError: On a schema violation
        MalformedComplex: On loops, duplicates or bad indices
    """
    validate_document(data, "complex")
    return validate(data["m"], data["edges"])


def load_complex(path: Path) -> Complex1D:
    return parse_complex(load_json(path))


def dump_complex(c: Complex1D) -> dict:
    return c.to_dict()


def _resolve_complex(data: dict, base_dir: Path | None, given: Complex1D | None) -> Complex1D:
    ref = data.get("complex")
    if ref is None:
        if given is None:
            raise ValidationError("document names no complex")
        return given
    if isinstance(ref, str):
        complex_ = load_complex((base_dir or Path.cwd()) / ref)
    else:
        complex_ = parse_complex(ref)
    if given is not None and complex_ != given:
        raise ValidationError("document complex differs from the one given")
    return complex_


# -- function bodies -------------------------------------------------------


def _parse_tent(terms: list[dict], exact: bool) -> TentPoly:
    items = []
    for term in terms:
        exp = {int(v): int(p) for v, p in term.get("exp", {}).items()}
        mono = tuple(sorted((v, p) for v, p in exp.items() if p))
        items.append((mono, to_scalar(term["c"], exact)))
    return TentPoly.of(items)


def _parse_body(
    body: dict, complex_: Complex1D, exact: bool, tol: ToleranceSettings | None
) -> PiecewisePoly:
    if "tent" in body:
        g = _parse_tent(body["tent"], exact)
        try:
            return from_tent(complex_, g)
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc

    polys: dict = {}
    for key, coeffs in body.get("edge_polys", {}).items():
        edge = parse_edge_key(key)
        if not complex_.has_edge(edge):
            raise ValidationError(f"edge_polys names {key}, which is not an edge i-j with i < j")
        polys[edge] = Poly.of([to_scalar(c, exact) for c in coeffs])
    for edge in complex_.edges:
        polys.setdefault(edge, Poly.zero())

    values: dict = {}
    for key, value in body.get("isolated_values", {}).items():
        v = int(key)
        if v not in complex_.isolated:
            raise ValidationError(f"isolated_values names {v}, which is not an isolated vertex")
        values[v] = to_scalar(value, exact)
    for v in complex_.isolated:
        values.setdefault(v, to_scalar(0, exact))
    return make(complex_, polys, values, tol)


def _dump_body(f: PiecewisePoly, fmt: OutputFormat, tol: ToleranceSettings | None) -> dict:
    if fmt == "tent":
        return {"tent": dump_tent(to_tent(f, tol))}
    body: dict = {
        "edge_polys": {
            edge_key(edge): [render(c) for c in p.coeffs]
            for edge, p in zip(f.complex.edges, f.edge_polys)
        }
    }
    if f.complex.isolated:
        body["isolated_values"] = {
            str(v): render(x) for v, x in zip(f.complex.isolated, f.isolated_values)
        }
    return body


def dump_tent(g: TentPoly) -> list[dict]:
    return [
        {"c": render(c), "exp": {str(v): p for v, p in mono}} if mono else {"c": render(c)}
        for mono, c in g.items()
    ]


# -- functions -------------------------------------------------------------


def parse_function(
    data: Any,
    base_dir: Path | None = None,
    exact: bool | None = None,
    tol: ToleranceSettings | None = None,
) -> Loaded:
    """Parse a function document in edge form or tent form.

    Args:
        data: Parsed JSON
        base_dir: Directory for resolving a complex given as a path
        exact: Force rational (``True``) or float (``False``) coefficients;
            ``None`` picks rational when every number is
        tol: Tolerances for the continuity check

    Returns:
        ``Loaded`` wrapping a ``PiecewisePoly``
    """
    if not isinstance(data, dict):
        raise ValidationError("function document must be a JSON object")
    validate_document(data, "tent" if "tent" in data else "function")
    complex_ = _resolve_complex(data, base_dir, None)
    rational = _is_exact(data)
    use_exact = rational if exact is None else exact
    return Loaded(_parse_body(data, complex_, use_exact, tol), rational)


def load_function(
    path: Path, exact: bool | None = None, tol: ToleranceSettings | None = None
) -> Loaded:
    return parse_function(load_json(path), path.parent, exact, tol)


def dump_function(
    f: PiecewisePoly, fmt: OutputFormat = "edge", tol: ToleranceSettings | None = None
) -> dict:
    return {"complex": dump_complex(f.complex), **_dump_body(f, fmt, tol)}


# -- certificates ----------------------------------------------------------


def parse_certificate(
    data: Any,
    base_dir: Path | None = None,
    complex_: Complex1D | None = None,
    exact: bool | None = None,
) -> Loaded:
    """Parse a certificate document.

    Root bodies are checked for continuity with the default tolerances;
    the complex comes from the document or from ``complex_``.
    """
    validate_document(data, "certificate")
    c = _resolve_complex(data, base_dir, complex_)
    rational = _is_exact(data)
    use_exact = rational if exact is None else exact

    def body(b: dict) -> PiecewisePoly:
        try:
            return _parse_body(b, c, use_exact, None)
        except TentpoleError:
            raise
        except (KeyError, ValueError) as exc:
            raise ValidationError(f"bad certificate body: {exc}") from exc

    edge_terms = {}
    for key, roots in data["edge_terms"].items():
        edge = parse_edge_key(key)
        if edge[0] >= edge[1] or edge[1] > c.m:
            raise ValidationError(f"edge_terms key {key} is not a pair i-j with i < j <= {c.m}")
        edge_terms[edge] = tuple(body(b) for b in roots)
    cert = Certificate(
        c, tuple(body(b) for b in data["s_roots"]), dict(sorted(edge_terms.items()))
    )
    meta = data.get("meta", {})
    if meta.get("residual") is not None:
        cert.meta.residual = float(meta["residual"])
    return Loaded(cert, rational)


def load_certificate(
    path: Path, complex_: Complex1D | None = None, exact: bool | None = None
) -> Loaded:
    return parse_certificate(load_json(path), path.parent, complex_, exact)


def dump_certificate(
    cert: Certificate, fmt: OutputFormat = "edge", tol: ToleranceSettings | None = None
) -> dict:
    return {
        "complex": dump_complex(cert.complex),
        "format": fmt,
        "s_roots": [_dump_body(r, fmt, tol) for r in cert.s_roots],
        "edge_terms": {
            edge_key(edge): [_dump_body(r, fmt, tol) for r in roots]
            for edge, roots in sorted(cert.edge_terms.items())
        },
        "meta": cert.meta.to_dict(),
    }


def dump_qm(
    complex_: Complex1D,
    terms: list[QmTerm],
    fmt: OutputFormat = "edge",
    tol: ToleranceSettings | None = None,
) -> dict:
    """Quadratic-module form: one entry per generator, ``null`` standing for 1."""
    return {
        "complex": dump_complex(complex_),
        "format": fmt,
        "terms": [
            {"generator": t.generator, "roots": [_dump_body(r, fmt, tol) for r in t.roots]}
            for t in terms
        ],
    }


def dumps(data: Any, indent: int | None = 2) -> str:
    """Deterministic JSON text: sorted keys, shortest round-trip floats."""
    return json.dumps(data, sort_keys=True, indent=indent, default=render) + "\n"


def write(path: Path, data: Any, indent: int | None = 2) -> None:
    try:
        path.write_text(dumps(data, indent))
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc
