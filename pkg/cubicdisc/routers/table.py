from pathlib import Path
from typing import Optional

import typer

from cubicdisc.config import get_settings
from cubicdisc.routers.common import TableFormat, domain_errors
from cubicdisc.services.tabulate import table_service

router = typer.Typer()


@router.command("table")
def table(
    d_max: Optional[int] = typer.Option(None, "--max", help="largest discriminant (default 200)"),
    fmt: TableFormat = typer.Option(TableFormat.text, "--format", "-f"),
    out: Optional[Path] = typer.Option(None, "--out", help="write to this file instead of stdout"),
    workers: Optional[int] = typer.Option(None, "--workers", help="worker processes for row evaluation"),
):
    """Every d <= MAX satisfying (*), marked by (**) and (***)."""
    settings = get_settings()
    with domain_errors():
        rows = table_service.generate_table(
            d_max if d_max is not None else settings.table_max,
            workers=workers if workers is not None else settings.table_workers,
        )
        text = table_service.render(rows, fmt.value)

    if out is None:
        typer.echo(text, nl=False)
        return
    out.write_text(text, encoding="utf-8")
    typer.echo(f"wrote {len(rows)} rows to {out}", err=True)
