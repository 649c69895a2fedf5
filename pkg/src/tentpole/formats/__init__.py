"""JSON documents for complexes, functions and certificates."""

from tentpole.formats.documents import (
    Loaded,
    OutputFormat,
    dump_certificate,
    dump_complex,
    dump_function,
    dump_qm,
    dump_tent,
    dumps,
    load_certificate,
    load_complex,
    load_function,
    parse_certificate,
    parse_complex,
    parse_function,
    write,
)
from tentpole.formats.numbers import load_json, render, to_scalar

__all__ = [
    "Loaded",
    "OutputFormat",
    "dump_certificate",
    "dump_complex",
    "dump_function",
    "dump_qm",
    "dump_tent",
    "dumps",
    "load_certificate",
    "load_complex",
    "load_function",
    "load_json",
    "parse_certificate",
    "parse_complex",
    "parse_function",
    "render",
    "to_scalar",
    "write",
]
