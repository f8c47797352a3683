from typing import List, Optional

import typer

from cubicdisc.config import get_settings
from cubicdisc.model.models import CanonicalForm, GramMatrix
from cubicdisc.model.schemas import CanonicalRecord
from cubicdisc.routers.common import OutputFormat, abort, domain_errors, show
from cubicdisc.services import lattice

router = typer.Typer()


def to_canonical_record(cf: CanonicalForm) -> CanonicalRecord:
    return CanonicalRecord(
        k=cf.k,
        c=cf.c,
        discriminant=cf.discriminant,
        transform=[list(row) for row in cf.transform],
        gram=cf.gram.rows(),
    )


@router.command("canon", context_settings={"ignore_unknown_options": True})
def canon(
    entries: List[int] = typer.Argument(..., help="9 Gram entries, row-major"),
    hyperbolic: bool = typer.Option(False, "--hyperbolic", help="also search the canonical lattice for a hyperbolic plane"),
    bound: Optional[int] = typer.Option(None, "--bound", help="box bound for --hyperbolic"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", "-f"),
):
    """Reduce an even rank-3 Gram matrix with a -A2 block to its normal form."""
    if len(entries) != 9:
        abort(f"expected 9 entries, got {len(entries)}")

    with domain_errors():
        cf = lattice.canonicalize_rank3(GramMatrix.from_flat(entries))
        pair = None
        if hyperbolic:
            pair = lattice.find_hyperbolic_plane(cf.gram, bound if bound is not None else get_settings().search_bound)

    if fmt is OutputFormat.json:
        typer.echo(to_canonical_record(cf).model_dump_json(indent=2))
        return
    typer.echo(f"k={cf.k} c={cf.c} discriminant={cf.discriminant}")
    typer.echo(f"transform={[list(row) for row in cf.transform]}")
    typer.echo(f"gram={cf.gram.rows()}")
    if hyperbolic:
        typer.echo("hyperbolic pair: " + (f"e={pair[0]} f={pair[1]}" if pair else show(None)))
