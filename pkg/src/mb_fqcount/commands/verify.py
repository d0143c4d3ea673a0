"""Compare the formula path with enumeration for one equation."""

from typing import Annotated

import typer

from mb_fqcount.app_context import use_context
from mb_fqcount.counting import count_solutions, plan_formula
from mb_fqcount.errors import FqCountError
from mb_fqcount.notation import parse_equation
from mb_fqcount.output import exit_code_for
from mb_fqcount.reports import VerifyReport


def verify(
    ctx: typer.Context,
    field: Annotated[str, typer.Option("--field", help="Field: 'p' or 'p^s'.")],
    eq: Annotated[str, typer.Option("--eq", help="Equation, e.g. 'diag a=1,1 m=1,3'.")],
    *,
    restricted: Annotated[bool, typer.Option("--restricted", help="Count only solutions with every x_j nonzero.")] = False,
) -> None:
    """Run both paths; exit 1 if an applicable formula disagrees with enumeration."""
    app = use_context(ctx)
    cfg = app.cfg
    try:
        field_spec = app.field(field)
        equation = parse_equation(eq, field_spec)
        plan = plan_formula(equation, field_spec, restricted=restricted, work_cap=cfg.work_cap, workers=cfg.workers)
        formula = plan.evaluate() if plan.evaluate is not None else None
        brute = count_solutions(equation, field_spec, restricted=restricted, work_cap=cfg.work_cap, workers=cfg.workers)
    except FqCountError as e:
        app.out.print_error_and_exit(e.code, e.message)
    report = VerifyReport(
        q=field_spec.q,
        n=equation.n,
        restricted=restricted,
        formula_method=plan.method if formula is not None else None,
        formula_value=formula,
        brute_value=brute,
        match=None if formula is None else formula == brute,
        hypotheses=tuple(plan.hypotheses),
    )
    app.out.print_verify(report)
    if not report.ok:
        raise typer.Exit(exit_code_for("mismatch"))
