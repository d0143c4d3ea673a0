"""CLI entry point for mb-fqcount."""

from pathlib import Path
from typing import Annotated

import typer
from mm_clikit import TyperPlus

from mb_fqcount.app_context import AppContext
from mb_fqcount.commands.bijection_check import bijection_check
from mb_fqcount.commands.count import count
from mb_fqcount.commands.show_elements import show_elements
from mb_fqcount.commands.sweep import sweep
from mb_fqcount.commands.verify import verify
from mb_fqcount.config import Config
from mb_fqcount.errors import FqCountError
from mb_fqcount.log import setup_logging
from mb_fqcount.output import Output, OutputFormat

app = TyperPlus(package_name="mb-fqcount")


@app.callback()
def callback(
    ctx: typer.Context,
    *,
    output: Annotated[OutputFormat, typer.Option("--output", "-o", help="Report encoding.")] = OutputFormat.JSON,
    cap: Annotated[int | None, typer.Option("--cap", help="Work cap in tuple evaluations (env FQCOUNT_CAP).")] = None,
    workers: Annotated[int | None, typer.Option("--workers", help="Worker processes (env FQCOUNT_WORKERS).")] = None,
    data_dir: Annotated[Path | None, typer.Option("--data-dir", help="Data directory path.")] = None,
    verbose: Annotated[bool, typer.Option("--verbose", help="Also log progress to stderr.")] = False,
) -> None:
    """Exact solution counts for diagonal and Carlitz-type equations over finite fields."""
    out = Output(output)
    try:
        cfg = Config.build(data_dir, work_cap=cap, workers=workers)
    except FqCountError as e:
        out.print_error_and_exit(e.code, e.message)
    cfg.data_dir.mkdir(parents=True, exist_ok=True)
    setup_logging(cfg.log_path, verbose=verbose)
    ctx.obj = AppContext(out=out, cfg=cfg)


# Counting
app.command()(count)
app.command()(verify)
app.command()(sweep)

# Proof artifacts
app.command("bijection-check")(bijection_check)
app.command("show-elements")(show_elements)
