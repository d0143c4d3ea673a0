"""Count solutions of one equation."""

from typing import Annotated

import typer

from mb_fqcount.app_context import use_context
from mb_fqcount.counting import MethodChoice
from mb_fqcount.counting import count as count_equation
from mb_fqcount.errors import FqCountError
from mb_fqcount.notation import parse_equation


def count(
    ctx: typer.Context,
    field: Annotated[str, typer.Option("--field", help="Field: 'p' or 'p^s'.")],
    eq: Annotated[str, typer.Option("--eq", help="Equation, e.g. 'diag a=1,1 m=1,3'.")],
    *,
    method: Annotated[MethodChoice, typer.Option("--method", help="auto, force-brute or force-formula.")] = MethodChoice.AUTO,
    restricted: Annotated[bool, typer.Option("--restricted", help="Count only solutions with every x_j nonzero.")] = False,
) -> None:
    """Count solutions by the strongest applicable formula, or by enumeration."""
    app = use_context(ctx)
    try:
        field_spec = app.field(field)
        equation = parse_equation(eq, field_spec)
        report = count_equation(
            equation, field_spec, method=method, restricted=restricted, work_cap=app.cfg.work_cap, workers=app.cfg.workers
        )
    except FqCountError as e:
        app.out.print_error_and_exit(e.code, e.message)
    app.out.print_count(report)
