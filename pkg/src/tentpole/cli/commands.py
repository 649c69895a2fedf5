"""CLI command implementations for Tentpole."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Literal

import pydantic
import typer
from pydantic import BaseModel, Field
from rich.console import Console
from rich.table import Table

from tentpole.errors import MathematicalFailure, TentpoleError, ValidationError
from tentpole.pwpoly import PiecewisePoly
from tentpole.settings import ToleranceSettings, get_settings

console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger(__name__)

EXIT_MATH = 1
EXIT_INPUT = 2


class JobConfig(BaseModel):
    """One CLI invocation, validated before any work is done."""

    command: str
    inputs: list[Path] = Field(default_factory=list)
    output: Path | None = None
    tolerances: ToleranceSettings = Field(default_factory=ToleranceSettings)
    seed: int | None = Field(default=None, ge=0, lt=2**64)
    format: Literal["edge", "tent"] = "edge"
    exact: bool | None = None
    json_output: bool = False


def tolerances_with(overrides: dict[str, float | None]) -> ToleranceSettings:
    """Configured tolerances with the given non-``None`` overrides applied."""
    base = get_settings().tolerances.model_dump()
    base.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return ToleranceSettings(**base)
    except pydantic.ValidationError as exc:
        raise ValidationError(
            "invalid tolerance override",
            errors=[f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors()],
        ) from exc


def job(**fields: Any) -> JobConfig:
    try:
        return JobConfig(**fields)
    except pydantic.ValidationError as exc:
        first = exc.errors()[0]
        raise ValidationError(f"{'.'.join(map(str, first['loc']))}: {first['msg']}") from exc


@contextmanager
def handle_errors() -> Iterator[None]:
    """Map Tentpole errors to a one-line reason on stderr and an exit code."""
    try:
        yield
    except TentpoleError as err:
        err_console.print(err.reason(), markup=False, highlight=False, soft_wrap=True)
        for line in getattr(err, "errors", [])[1:]:
            err_console.print(f"  {line}", markup=False, highlight=False, soft_wrap=True)
        raise typer.Exit(EXIT_MATH if isinstance(err, MathematicalFailure) else EXIT_INPUT)


def emit_document(cfg: JobConfig, data: Any) -> None:
    """Write a document to ``cfg.output`` or to stdout."""
    from tentpole.formats import dumps, write

    indent = get_settings().output.indent
    if cfg.output is not None:
        write(cfg.output, data, indent)
        logger.info("wrote %s", cfg.output)
    else:
        typer.echo(dumps(data, indent), nl=False)


def emit_report(cfg: JobConfig, title: str, report: dict) -> None:
    """Print a report as JSON (``--json``) or as a table."""
    from tentpole.formats import dumps

    if cfg.json_output:
        typer.echo(dumps(report, indent=2), nl=False)
        return
    table = Table(title=title, show_header=False)
    table.add_column("key", style="cyan")
    table.add_column("value")
    for key, value in report.items():
        if isinstance(value, list | dict):
            continue
        table.add_row(key, "-" if value is None else str(value))
    console.print(table)


def _degree(x: float) -> int | None:
    return None if x == float("-inf") else int(x)


# -- commands --------------------------------------------------------------


def run_certify(cfg: JobConfig) -> None:
    from tentpole.certify import certify
    from tentpole.formats import dump_certificate, load_function

    f = load_function(cfg.inputs[0], tol=cfg.tolerances).value
    cert = certify(f, cfg.tolerances)
    emit_document(cfg, dump_certificate(cert, cfg.format, cfg.tolerances))
    if cfg.output is not None:
        emit_report(cfg, "Certificate", cert.meta.to_dict())


def run_verify(cfg: JobConfig) -> None:
    from tentpole.certify import verify
    from tentpole.formats import load_certificate, load_function

    fn = load_function(cfg.inputs[0], tol=cfg.tolerances)
    cert = load_certificate(cfg.inputs[1], fn.value.complex)
    exact = cfg.exact
    if exact is None:
        exact = fn.exact and cert.exact
    elif exact and not (fn.exact and cert.exact):
        logger.warning("float inputs are converted to rationals without rounding")

    result = verify(fn.value, cert.value, cfg.tolerances, exact=exact)
    emit_report(cfg, "Verification", result.to_dict())
    if result.support_note:
        logger.warning(result.support_note)
    if not result.passed:
        raise MathematicalFailure(
            "certificate does not verify",
            residual=result.residual,
            degree_ok=result.degree_ok,
            count_ok=result.count_ok,
        )


def run_check_nonneg(cfg: JobConfig) -> None:
    from tentpole.certify import is_nonneg

    f = _load(cfg)
    report = is_nonneg(f, cfg.tolerances)
    data = report.to_dict()
    if report.witness is not None:
        data["at"] = report.witness.describe()
    emit_report(cfg, "Nonnegativity", data)
    report.raise_if_negative()


def run_degree(cfg: JobConfig) -> None:
    f = _load(cfg)
    if cfg.json_output:
        emit_report(cfg, "Degree", {"degree": _degree(f.degree)})
    else:
        typer.echo("-inf" if _degree(f.degree) is None else str(_degree(f.degree)))


def run_convert(cfg: JobConfig) -> None:
    from tentpole.formats import dump_function, load_function

    f = load_function(cfg.inputs[0], exact=cfg.exact, tol=cfg.tolerances).value
    emit_document(cfg, dump_function(f, cfg.format, cfg.tolerances))


def run_qm_convert(cfg: JobConfig) -> None:
    from tentpole.certify import qm_convert
    from tentpole.formats import dump_qm, load_certificate, load_complex

    given = load_complex(cfg.inputs[1]) if len(cfg.inputs) > 1 else None
    cert = load_certificate(cfg.inputs[0], given, exact=cfg.exact).value
    emit_document(cfg, dump_qm(cert.complex, qm_convert(cert), cfg.format, cfg.tolerances))


def run_gen(cfg: JobConfig, degree: int) -> None:
    from tentpole.certify import random_nonneg
    from tentpole.formats import dump_function, load_complex

    if degree < 0:
        raise ValidationError(f"degree must be nonnegative, got {degree}")
    complex_ = load_complex(cfg.inputs[0])
    f = random_nonneg(complex_, degree, cfg.seed or 0)
    emit_document(cfg, dump_function(f, cfg.format, cfg.tolerances))


def run_info(cfg: JobConfig) -> None:
    from tentpole.pwpoly import to_tent
    from tentpole.simplicial import components

    f = _load(cfg)
    c = f.complex
    report = {
        "m": c.m,
        "e": c.e,
        "m0": c.m0,
        "components": len(components(c)),
        "degree": _degree(f.degree),
        "tent_degree": _degree(to_tent(f, cfg.tolerances).degree),
        "exact": f.is_exact,
    }
    emit_report(cfg, "Function", report)


def _load(cfg: JobConfig) -> PiecewisePoly:
    from tentpole.formats import load_function

    return load_function(cfg.inputs[0], exact=cfg.exact, tol=cfg.tolerances).value
