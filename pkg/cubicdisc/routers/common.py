from __future__ import annotations

from contextlib import contextmanager
from enum import Enum
from typing import Iterator, NoReturn

import typer
from pydantic import ValidationError

from cubicdisc.model.errors import CubicDiscError

EXIT_DOMAIN = 1
EXIT_NOT_STAR_STAR_STAR = 3


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


class TableFormat(str, Enum):
    text = "text"
    csv = "csv"
    json = "json"
    latex = "latex"


def abort(message: str, code: int = EXIT_DOMAIN) -> NoReturn:
    typer.echo(f"error: {message}", err=True)
    raise typer.Exit(code=code)


@contextmanager
def domain_errors() -> Iterator[None]:
    """Turn errors raised by the services into a diagnostic and exit code 1."""
    try:
        yield
    except ValidationError as exc:
        abort(f"invalid value: {exc.errors()[0]['msg']}")
    except CubicDiscError as exc:
        abort(str(exc))


def flag(value: bool) -> str:
    return "true" if value else "false"


def show(value) -> str:
    return "none" if value is None else str(value)
