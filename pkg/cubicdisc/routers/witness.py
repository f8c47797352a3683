from typing import Optional

import typer

from cubicdisc.model.models import HilbWitness
from cubicdisc.model.schemas import WitnessRecord
from cubicdisc.routers.common import EXIT_NOT_STAR_STAR_STAR, OutputFormat, abort, domain_errors
from cubicdisc.services import witness as witness_service

router = typer.Typer()


def to_witness_record(w: HilbWitness) -> WitnessRecord:
    return WitnessRecord(
        d=w.d,
        n=w.n,
        a=w.a,
        m=w.m,
        case=w.case_id,
        w=list(w.coords.coords),
        k=w.canonical.k,
        c=w.canonical.c,
        chi_l1_w=w.chi_l1_w,
        chi_w_w=w.chi_w_w,
    )


def render_witness(w: HilbWitness) -> str:
    span = witness_service.forward_identity(w)
    e, f = witness_service.hyperbolic_pair(w)
    return "\n".join(
        [
            f"d={w.d} n={w.n} a={w.a} case={w.case_id} m={w.m}",
            f"w={w.coords} chi=({w.chi_l1_w},{w.chi_w_w})",
            f"gram={[list(row) for row in w.canonical.gram.entries]}",
            f"span: n'={span.n_span} disc={span.disc} index={span.index}",
            f"hyperbolic pair (negated pairing): e={e} f={f}",
        ]
    )


@router.command("witness", context_settings={"ignore_unknown_options": True})
def witness(
    d: int = typer.Argument(..., help="discriminant satisfying (***)"),
    n: Optional[int] = typer.Option(None, "--n", help="certificate n (with --a)"),
    a: Optional[int] = typer.Option(None, "--a", help="certificate a (with --n)"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", "-f"),
):
    """Build w with <l1, w> = 1 and <w, w> = 0 from a solution of d*a^2 = 2n^2+2n+2."""
    if (n is None) != (a is None):
        raise typer.BadParameter("--n and --a must be given together")

    with domain_errors():
        if n is None:
            w = witness_service.witness_for(d)
            if w is None:
                abort(f"d={d} does not satisfy (***)", code=EXIT_NOT_STAR_STAR_STAR)
        else:
            w = witness_service.construct_hilb_witness(d, n, a)
        text = render_witness(w)

    if fmt is OutputFormat.json:
        typer.echo(to_witness_record(w).model_dump_json(indent=2))
    else:
        typer.echo(text)
