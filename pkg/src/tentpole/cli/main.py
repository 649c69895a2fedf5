"""Main CLI entry point for Tentpole."""

from pathlib import Path
from typing import Annotated, Any

import typer
from rich.console import Console

from tentpole.cli import commands
from tentpole.cli.commands import handle_errors, job, tolerances_with

app = typer.Typer(
    name="tentpole",
    help="Tentpole: positivity certificates for piecewise polynomials on graphs",
    no_args_is_help=True,
)
console = Console()

FunctionArg = Annotated[Path, typer.Argument(help="Function document (edge or tent form)")]
CertificateArg = Annotated[Path, typer.Argument(help="Certificate document")]
OutputOpt = Annotated[
    Path | None, typer.Option("--output", "-o", help="Write the document here instead of stdout")
]
FormatOpt = Annotated[
    str | None, typer.Option("--format", "-f", help="Emit functions in edge or tent form")
]
JsonOpt = Annotated[bool, typer.Option("--json", help="Print the report as JSON")]
ExactOpt = Annotated[
    bool | None,
    typer.Option("--exact/--no-exact", help="Force or refuse rational arithmetic (default: auto)"),
]


@app.callback()
def main(
    ctx: typer.Context,
    config: Path = typer.Option(None, "--config", "-c", help="Settings YAML file"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log construction steps"),
    tol_sos: float = typer.Option(None, "--tol-sos", help="Interval SOS residual"),
    tol_interp: float = typer.Option(None, "--tol-interp", help="Boundary interpolation"),
    tol_bnd: float = typer.Option(None, "--tol-bnd", help="Boundary feasibility slack"),
    tol_dom: float = typer.Option(None, "--tol-dom", help="Square root dominance slack"),
    tol_nonneg: float = typer.Option(None, "--tol-nonneg", help="Nonnegativity threshold"),
    tol_compat: float = typer.Option(None, "--tol-compat", help="Vertex compatibility"),
    tol_cert: float = typer.Option(None, "--tol-cert", help="Certificate residual"),
    tol_roots: float = typer.Option(None, "--tol-roots", help="Root reconstruction residual"),
    tol_pair: float = typer.Option(None, "--tol-pair", help="Real root detection"),
):
    """Load settings, configure logging and collect tolerance overrides."""
    from tentpole.log import configure_logging
    from tentpole.settings import get_settings, load_settings_from_yaml

    settings = load_settings_from_yaml(config) if config is not None else get_settings()
    configure_logging(settings.logging, verbose=verbose)
    with handle_errors():
        tolerances = tolerances_with(
            {
                "sos": tol_sos,
                "interp": tol_interp,
                "bnd": tol_bnd,
                "dom": tol_dom,
                "nonneg": tol_nonneg,
                "compat": tol_compat,
                "cert": tol_cert,
                "roots": tol_roots,
                "pair": tol_pair,
            }
        )
    ctx.obj = {"tolerances": tolerances, "format": settings.output.format}


def _job(ctx: typer.Context, command: str, **fields: Any) -> commands.JobConfig:
    if fields.get("format") is None:
        fields["format"] = ctx.obj["format"]
    return job(command=command, tolerances=ctx.obj["tolerances"], **fields)


@app.command()
def certify(
    ctx: typer.Context,
    function: FunctionArg,
    output: OutputOpt = None,
    fmt: FormatOpt = None,
    json_output: JsonOpt = False,
):
    """Construct a sums-of-squares certificate for a nonnegative function."""
    with handle_errors():
        cfg = _job(
            ctx, "certify", inputs=[function], output=output, format=fmt, json_output=json_output
        )
        commands.run_certify(cfg)


@app.command()
def verify(
    ctx: typer.Context,
    function: FunctionArg,
    certificate: CertificateArg,
    exact: ExactOpt = None,
    json_output: JsonOpt = False,
):
    """Check a certificate against a function by expansion."""
    with handle_errors():
        cfg = _job(
            ctx, "verify", inputs=[function, certificate], exact=exact, json_output=json_output
        )
        commands.run_verify(cfg)


@app.command("check-nonneg")
def check_nonneg(
    ctx: typer.Context,
    function: FunctionArg,
    json_output: JsonOpt = False,
):
    """Decide nonnegativity and print the minimum with its location."""
    with handle_errors():
        commands.run_check_nonneg(
            _job(ctx, "check-nonneg", inputs=[function], json_output=json_output)
        )


@app.command()
def degree(
    ctx: typer.Context,
    function: FunctionArg,
    json_output: JsonOpt = False,
):
    """Print the degree of a function."""
    with handle_errors():
        commands.run_degree(_job(ctx, "degree", inputs=[function], json_output=json_output))


@app.command()
def convert(
    ctx: typer.Context,
    function: FunctionArg,
    fmt: FormatOpt = None,
    output: OutputOpt = None,
    exact: ExactOpt = None,
):
    """Rewrite a function in edge form or tent form."""
    with handle_errors():
        cfg = _job(ctx, "convert", inputs=[function], output=output, format=fmt, exact=exact)
        commands.run_convert(cfg)


@app.command("qm-convert")
def qm_convert(
    ctx: typer.Context,
    certificate: CertificateArg,
    complex_path: Path = typer.Option(
        None, "--complex", help="Complex, when the certificate does not name one"
    ),
    fmt: FormatOpt = None,
    output: OutputOpt = None,
    exact: ExactOpt = None,
):
    """Rewrite a certificate in the quadratic module generated by the tents."""
    inputs = [certificate] if complex_path is None else [certificate, complex_path]
    with handle_errors():
        cfg = _job(ctx, "qm-convert", inputs=inputs, output=output, format=fmt, exact=exact)
        commands.run_qm_convert(cfg)


@app.command()
def gen(
    ctx: typer.Context,
    complex_path: Path = typer.Option(..., "--complex", help="Complex document"),
    degree: int = typer.Option(..., "--degree", "-d", help="Degree bound"),
    seed: int = typer.Option(0, "--seed", "-s", help="Random seed"),
    fmt: FormatOpt = None,
    output: OutputOpt = None,
):
    """Generate a random nonnegative function on a complex."""
    with handle_errors():
        cfg = _job(ctx, "gen", inputs=[complex_path], output=output, format=fmt, seed=seed)
        commands.run_gen(cfg, degree)


@app.command()
def info(
    ctx: typer.Context,
    function: FunctionArg,
    json_output: JsonOpt = False,
):
    """Print the shape of a function: complex counts, degree and tent degree."""
    with handle_errors():
        commands.run_info(_job(ctx, "info", inputs=[function], json_output=json_output))


@app.command()
def schemas():
    """List the document schemas this build understands."""
    from tentpole.validate import get_registry

    registry = get_registry()
    console.print("\n[bold]Document Schemas[/bold]\n")
    for version in registry.list_versions():
        for name in registry.list_schemas(version):
            console.print(f"  - {version}/{name}")
    console.print()


if __name__ == "__main__":
    app()
