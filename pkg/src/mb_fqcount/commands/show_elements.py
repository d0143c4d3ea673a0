"""Print the element table of a field."""

from typing import Annotated

import typer

from mb_fqcount.app_context import use_context
from mb_fqcount.errors import FqCountError


def show_elements(ctx: typer.Context, field: Annotated[str, typer.Option("--field", help="Field: 'p' or 'p^s'.")]) -> None:
    """Print index <-> polynomial pairs; equation coefficients are given by these indices."""
    app = use_context(ctx)
    try:
        field_spec = app.field(field)
    except FqCountError as e:
        app.out.print_error_and_exit(e.code, e.message)
    app.out.print_elements(field_spec)
