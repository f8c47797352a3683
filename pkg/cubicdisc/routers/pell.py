from typing import Optional

import typer

from cubicdisc.model.errors import TheoryViolation
from cubicdisc.model.models import PellSolution
from cubicdisc.model.schemas import PellRecord
from cubicdisc.routers.common import OutputFormat, domain_errors
from cubicdisc.services import pell as pell_service

router = typer.Typer()


def oracle_agrees(sol: Optional[PellSolution], oracle: list[PellSolution], y_max: int) -> bool:
    """The solver's answer is consistent with every solution with y <= y_max."""
    if oracle:
        return sol is not None and sol.y == oracle[0].y
    return sol is None or sol.y > y_max


def to_pell_record(D: int, N: int, sol: Optional[PellSolution], y_max: Optional[int], agrees: Optional[bool]) -> PellRecord:
    return PellRecord(
        D=D,
        N=N,
        x=sol.x if sol else None,
        y=sol.y if sol else None,
        oracle_y_max=y_max,
        oracle_agrees=agrees,
    )


@router.command("pell", context_settings={"ignore_unknown_options": True})
def pell(
    coeff: int = typer.Argument(..., metavar="D", help="positive coefficient D"),
    rhs: int = typer.Argument(..., metavar="N", help="right-hand side N, may be negative"),
    oracle: Optional[int] = typer.Option(None, "--oracle", help="cross-check against a brute-force scan of y <= ORACLE"),
    fmt: OutputFormat = typer.Option(OutputFormat.text, "--format", "-f"),
):
    """Least-y solution of x^2 - D*y^2 = N, or "none"."""
    agrees = None
    with domain_errors():
        sol = pell_service.solve_pell_general(coeff, rhs)
        if oracle is not None:
            agrees = oracle_agrees(sol, pell_service.pell_oracle(coeff, rhs, oracle), oracle)
            if not agrees:
                raise TheoryViolation(f"solver answer {sol} disagrees with the scan of y <= {oracle}")

    if fmt is OutputFormat.json:
        typer.echo(to_pell_record(coeff, rhs, sol, oracle, agrees).model_dump_json(indent=2))
        return
    typer.echo("none" if sol is None else f"x={sol.x} y={sol.y}")
    if agrees:
        typer.echo(f"oracle: agrees for y <= {oracle}")
