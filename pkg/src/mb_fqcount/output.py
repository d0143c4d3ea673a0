"""Report output in JSON or TSV on top of the dual-mode CLI output."""

import json
from collections.abc import Sequence
from enum import StrEnum
from typing import NoReturn

import typer
from mm_clikit import DualModeOutput

from mb_fqcount.field import FieldSpec
from mb_fqcount.reports import (
    TSV_COUNT_HEADER,
    TSV_SWEEP_HEADER,
    BijectionReport,
    CountReport,
    SweepRow,
    VerifyReport,
    encode_hypotheses,
)


class OutputFormat(StrEnum):
    """Report encodings."""

    JSON = "json"
    TSV = "tsv"


# Error code -> exit status; anything unlisted is a parse or validation error
EXIT_CODES = {
    "work_cap_exceeded": 3,
    "field_too_large": 3,
    "no_applicable_formula": 4,
    "hypothesis_failed": 4,
    "not_a_bijection": 1,
    "identity_violated": 1,
    "internal_inconsistency": 1,
    "divisibility_violation": 1,
    "mismatch": 1,
}
EXIT_PARSE = 2


def exit_code_for(code: str) -> int:
    """Exit status for an error code."""
    return EXIT_CODES.get(code, EXIT_PARSE)


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    return str(value)


class Output(DualModeOutput):
    """Prints every report kind in the selected format; one JSON document or one TSV table per command.

    JSON reports are bare objects (sweeps: one object per line) and TSV is the display mode, so the
    report printers write their encodings directly instead of going through ``output``.
    """

    def __init__(self, fmt: OutputFormat = OutputFormat.JSON) -> None:
        """Select the encoding."""
        super().__init__(json_mode=fmt is OutputFormat.JSON)
        self.fmt = fmt

    def _table(self, header: Sequence[str], rows: Sequence[Sequence[object]]) -> None:
        typer.echo("\t".join(header))
        for row in rows:
            typer.echo("\t".join(_cell(v) for v in row))

    # --- Counting ---

    def print_count(self, report: CountReport) -> None:
        """Print one count report."""
        if self.fmt is OutputFormat.JSON:
            typer.echo(report.to_json())
            return
        typer.echo("\t".join(TSV_COUNT_HEADER))
        typer.echo(report.to_tsv_row())

    def print_verify(self, report: VerifyReport) -> None:
        """Print a formula-against-enumeration comparison."""
        if self.fmt is OutputFormat.JSON:
            typer.echo(report.model_dump_json())
            return
        header = ("q", "n", "restricted", "formula_method", "formula_value", "brute_value", "match", "hypotheses")
        method = None if report.formula_method is None else report.formula_method.value
        row = (
            report.q,
            report.n,
            report.restricted,
            method,
            report.formula_value,
            report.brute_value,
            report.match,
            encode_hypotheses(report.hypotheses),
        )
        self._table(header, [row])

    # --- Sweeps ---

    def print_sweep_header(self) -> None:
        """Print the TSV header; JSON sweeps are one object per line without a header."""
        if self.fmt is OutputFormat.TSV:
            typer.echo("\t".join(TSV_SWEEP_HEADER))

    def print_sweep_row(self, row: SweepRow) -> None:
        """Print one sweep row as it is produced."""
        typer.echo(row.model_dump_json() if self.fmt is OutputFormat.JSON else row.to_tsv_row())

    # --- Bijections ---

    def print_bijection_report(self, report: BijectionReport) -> None:
        """Print fiber sizes, certificates and identities."""
        if self.fmt is OutputFormat.JSON:
            typer.echo(report.model_dump_json())
            return
        self._table(("c", "fiber_size"), sorted(report.fiber_sizes.items()))
        typer.echo("")
        self._table(
            ("source_c", "target_c", "source_size", "target_size", "pairs_stored", "digest"),
            [(e.source_c, e.target_c, e.source_size, e.target_size, e.pairs_stored, e.digest) for e in report.certificates],
        )
        typer.echo("")
        self._table(("identity", "lhs", "rhs", "holds"), [(e.name, e.lhs, e.rhs, e.holds) for e in report.identities])
        typer.echo("")
        self._table(("maps_available", "passed"), [(report.maps_available, report.passed)])

    # --- Fields ---

    def print_elements(self, field: FieldSpec) -> None:
        """Print the index <-> polynomial table of a field."""
        rows = [(i, str(a)) for i, a in enumerate(field.elements())]
        if self.fmt is OutputFormat.JSON:
            data = {"q": field.q, "modulus": list(field.modulus), "elements": [{"index": i, "poly": s} for i, s in rows]}
            typer.echo(json.dumps(data))
            return
        self._table(("index", "poly"), rows)

    # --- Errors ---

    def print_error_and_exit(self, code: str, message: str) -> NoReturn:
        """Print the diagnostic as the base output does, then exit with the status mapped from the error code."""
        try:
            super().print_error_and_exit(code, message)
        except (typer.Exit, SystemExit):
            raise typer.Exit(exit_code_for(code)) from None
        raise typer.Exit(exit_code_for(code))
