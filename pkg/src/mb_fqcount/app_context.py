"""Application context shared across CLI commands."""

from dataclasses import dataclass

import typer

from mb_fqcount.config import Config
from mb_fqcount.field import FieldSpec
from mb_fqcount.notation import parse_field
from mb_fqcount.output import Output


@dataclass(frozen=True, slots=True)
class AppContext:
    """Shared application state passed through Typer context."""

    out: Output
    cfg: Config

    def field(self, text: str) -> FieldSpec:
        """Parse a field argument under the configured field cap."""
        return parse_field(text, cap=self.cfg.field_cap)


def use_context(ctx: typer.Context) -> AppContext:
    """Extract application context from Typer context."""
    result: AppContext = ctx.obj
    return result
