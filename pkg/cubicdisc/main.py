from typing import Optional, Sequence

import typer

from cubicdisc import __version__
from cubicdisc.config import configure_logging
from cubicdisc.routers.canon import router as canon_router
from cubicdisc.routers.check import router as check_router
from cubicdisc.routers.pell import router as pell_router
from cubicdisc.routers.table import router as table_router
from cubicdisc.routers.witness import router as witness_router

app = typer.Typer(
    name="cubicdisc",
    help="Numerical conditions on discriminants of special cubic fourfolds.",
    no_args_is_help=True,
    add_completion=False,
)

app.add_typer(check_router)
app.add_typer(pell_router)
app.add_typer(witness_router)
app.add_typer(canon_router)
app.add_typer(table_router)


def _version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
    version: bool = typer.Option(False, "--version", callback=_version, is_eager=True),
):
    try:
        configure_logging(log_level)
    except ValueError as exc:
        raise typer.BadParameter(str(exc), param_hint="--log-level")


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one invocation and return its exit code."""
    try:
        app(args=list(argv) if argv is not None else None, prog_name="cubicdisc")
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0
