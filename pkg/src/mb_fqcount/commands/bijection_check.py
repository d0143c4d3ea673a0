"""Materialize the fiber family of an equation and verify its bijections and identities."""

from typing import Annotated

import typer

from mb_fqcount.app_context import use_context
from mb_fqcount.bijections import build_family, verify_all_bijections, verify_identities
from mb_fqcount.errors import FqCountError
from mb_fqcount.notation import parse_equation
from mb_fqcount.output import exit_code_for
from mb_fqcount.reports import BijectionReport, CertificateEntry


def bijection_check(
    ctx: typer.Context,
    field: Annotated[str, typer.Option("--field", help="Field: 'p' or 'p^s'.")],
    eq: Annotated[str, typer.Option("--eq", help="Equation, e.g. 'diag a=1,1 m=1,3'.")],
) -> None:
    """Verify the bijection for every c != 0 and the counting identities; exit 4 if no map applies."""
    app = use_context(ctx)
    cfg = app.cfg
    try:
        field_spec = app.field(field)
        equation = parse_equation(eq, field_spec)
        family = build_family(equation, field_spec, work_cap=cfg.work_cap)
        certificates = (
            verify_all_bijections(family, workers=cfg.workers, pairing_limit=cfg.pairing_limit) if family.maps_available else ()
        )
        identities = verify_identities(family)
    except FqCountError as e:
        app.out.print_error_and_exit(e.code, e.message)
    report = BijectionReport(
        q=field_spec.q,
        n=equation.n,
        kind=family.kind.value,
        pivot=family.pivot,
        fiber_sizes={c: len(fiber) for c, fiber in sorted(family.restricted.items())},
        certificates=tuple(
            CertificateEntry(
                source_c=cert.source_c,
                target_c=cert.target_c,
                source_size=cert.source_size,
                target_size=cert.target_size,
                pairs_stored=cert.pairs is not None,
                digest=cert.digest,
            )
            for cert in certificates
        ),
        identities=identities.checks,
        maps_available=family.maps_available,
        passed=identities.passed and family.maps_available,
    )
    app.out.print_bijection_report(report)
    if not identities.passed:
        raise typer.Exit(exit_code_for("identity_violated"))
    if not family.maps_available:
        raise typer.Exit(exit_code_for("hypothesis_failed"))
