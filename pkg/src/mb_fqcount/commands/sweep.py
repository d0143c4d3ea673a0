"""Sweep formula against enumeration over fields and equation instances."""

from typing import Annotated

import typer

from mb_fqcount.app_context import use_context
from mb_fqcount.errors import FqCountError
from mb_fqcount.field import make_field
from mb_fqcount.notation import parse_n_range, parse_q_list
from mb_fqcount.output import exit_code_for
from mb_fqcount.sweeps import SweepFamily, plan_sweep, run_sweep


def sweep(
    ctx: typer.Context,
    q_list: Annotated[str, typer.Option("--q-list", help="Field sizes, e.g. '3,5,7,9' or '3,3^2'.")],
    *,
    n_range: Annotated[str, typer.Option("--n-range", help="Variable counts, 'lo-hi' or 'n'.")] = "2-3",
    family: Annotated[SweepFamily, typer.Option("--family", help="Generated equation family.")] = SweepFamily.CLASSICAL,
    eq: Annotated[str | None, typer.Option("--eq", help="Sweep one fixed equation instead of a family.")] = None,
    instances: Annotated[int, typer.Option("--instances", min=1, help="Random instances per (q, n).")] = 1,
    m_max: Annotated[int, typer.Option("--m-max", min=1, help="Largest random exponent.")] = 6,
    seed: Annotated[int, typer.Option("--seed", help="Seed for random instances.")] = 0,
    row_cap: Annotated[int | None, typer.Option("--row-cap", min=1, help="Largest enumeration per row.")] = None,
    restricted: Annotated[bool, typer.Option("--restricted", help="Count only solutions with every x_j nonzero.")] = False,
) -> None:
    """Print one row per (field, instance); exit 1 if any row mismatches."""
    app = use_context(ctx)
    cfg = app.cfg
    mismatch = False
    try:
        fields = [make_field(p, s, cap=cfg.field_cap) for p, s in parse_q_list(q_list)]
        rows = plan_sweep(
            fields, parse_n_range(n_range), family, instances=instances, m_max=m_max, seed=seed, equation=eq
        )
        results = run_sweep(rows, restricted=restricted, work_cap=cfg.work_cap, row_cap=row_cap, workers=cfg.workers)
        app.out.print_sweep_header()
        for row in results:
            app.out.print_sweep_row(row)
            mismatch = mismatch or row.match is False
    except FqCountError as e:
        app.out.print_error_and_exit(e.code, e.message)
    if mismatch:
        raise typer.Exit(exit_code_for("mismatch"))
