import typer

from cubicdisc.model.models import ConditionReport
from cubicdisc.model.schemas import ConditionReportRecord
from cubicdisc.routers.common import OutputFormat, domain_errors, flag, show
from cubicdisc.services import conditions

router = typer.Typer()


def to_condition_report_record(r: ConditionReport) -> ConditionReportRecord:
    n, a = r.cert_pell if r.cert_pell else (None, None)
    return ConditionReportRecord(
        d=r.d,
        star=r.star,
        star_star=r.star_star,
        star_star_star=r.star_star_star,
        cert_a2=list(r.cert_a2_vector) if r.cert_a2_vector else None,
        cert_divisor_n=r.cert_divisor_n,
        cert_pell_n=n,
        cert_pell_a=a,
    )


def render_report(r: ConditionReport) -> str:
    a2 = "(%d,%d)" % r.cert_a2_vector if r.cert_a2_vector else None
    pell = "n=%d a=%d" % r.cert_pell if r.cert_pell else None
    return "\n".join(
        [
            f"d={r.d}",
            f"star={flag(r.star)}",
            f"star_star={flag(r.star_star)}",
            f"star_star_star={flag(r.star_star_star)}",
            f"factorization={r.cert_factorization}",
            f"cert_a2={show(a2)}",
            f"cert_divisor_n={show(r.cert_divisor_n)}",
            f"cert_pell={show(pell)}",
        ]
    )


@router.command("check")
def check(
    d: int = typer.Argument(..., help="discriminant, d >= 1"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", "-f"),
):
    """Decide (*), (**) and (***) for d and print the certificates."""
    with domain_errors():
        report = conditions.full_report(d)
    if fmt is OutputFormat.json:
        typer.echo(to_condition_report_record(report).model_dump_json(indent=2))
    else:
        typer.echo(render_report(report))
