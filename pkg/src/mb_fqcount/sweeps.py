"""Parameter sweeps: formula against enumeration over families of fields and equation instances."""

import logging
import random
from collections.abc import Iterator, Sequence
from enum import StrEnum

from mb_fqcount.counting import count_solutions, plan_formula
from mb_fqcount.equations import CarlitzEquation, DiagonalEquation, Equation, classical_carlitz
from mb_fqcount.errors import FqCountError
from mb_fqcount.field import FieldSpec
from mb_fqcount.forms import DEFAULT_WORK_CAP
from mb_fqcount.notation import format_equation, parse_equation
from mb_fqcount.reports import SweepRow

logger = logging.getLogger(__name__)


class SweepFamily(StrEnum):
    """Equation families a sweep can generate."""

    CLASSICAL = "classical"
    DIAG = "diag"
    CARLITZ = "carlitz"


def _nonzero(rng: random.Random, field: FieldSpec, n: int) -> tuple[int, ...]:
    return tuple(rng.randrange(1, field.q) for _ in range(n))


def _positive(rng: random.Random, n: int, high: int) -> tuple[int, ...]:
    return tuple(rng.randint(1, high) for _ in range(n))


def generate_instances(
    family: SweepFamily, field: FieldSpec, n: int, *, instances: int, m_max: int, seed: int
) -> list[Equation]:
    """Seeded random instances; instance i depends only on (seed, q, n, i)."""
    result: list[Equation] = []
    for i in range(instances):
        rng = random.Random(f"{seed}:{field.q}:{n}:{i}")
        if family is SweepFamily.CLASSICAL:
            result.append(classical_carlitz(field, n, field.element(rng.randrange(1, field.q))))
            continue
        a = tuple(field.element(v) for v in _nonzero(rng, field, n))
        m = _positive(rng, n, m_max)
        if family is SweepFamily.DIAG:
            result.append(DiagonalEquation(a=a, m=m))
        else:
            k = rng.randint(1, m_max)
            b = field.element(rng.randrange(1, field.q))
            result.append(CarlitzEquation(a=a, m=m, k=k, b=b, kv=_positive(rng, n, m_max)))
    return result


def sweep_row(
    eq: Equation, field: FieldSpec, *, restricted: bool = False, row_cap: int = DEFAULT_WORK_CAP, workers: int = 1
) -> SweepRow:
    """Evaluate one instance both ways; either side is left empty when it does not apply or exceeds the row cap."""
    plan = plan_formula(eq, field, restricted=restricted, work_cap=row_cap, workers=workers)
    formula: int | None = None
    if plan.evaluate is not None:
        try:
            formula = plan.evaluate()
        except FqCountError as e:
            if e.code != "work_cap_exceeded":
                raise
    brute = None
    if field.q**eq.n <= row_cap:
        brute = count_solutions(eq, field, restricted=restricted, work_cap=row_cap, workers=workers)
    match = formula == brute if formula is not None and brute is not None else None
    return SweepRow(
        q=field.q,
        n=eq.n,
        equation=format_equation(eq),
        hypotheses=tuple(plan.hypotheses),
        method=plan.method,
        formula=formula,
        brute=brute,
        match=match,
    )


def plan_sweep(
    fields: Sequence[FieldSpec],
    n_values: Sequence[int],
    family: SweepFamily,
    *,
    instances: int = 1,
    m_max: int = 6,
    seed: int = 0,
    equation: str | None = None,
) -> list[tuple[FieldSpec, Equation]]:
    """All (field, instance) pairs in row order: fields outermost, then n, then instance."""
    if not fields or (equation is None and not n_values):
        raise FqCountError("empty_range", "The sweep has no rows.")
    rows: list[tuple[FieldSpec, Equation]] = []
    for field in fields:
        if equation is not None:
            rows.append((field, parse_equation(equation, field)))
            continue
        for n in n_values:
            rows.extend((field, eq) for eq in generate_instances(family, field, n, instances=instances, m_max=m_max, seed=seed))
    return rows


def run_sweep(
    rows: Sequence[tuple[FieldSpec, Equation]],
    *,
    restricted: bool = False,
    work_cap: int = DEFAULT_WORK_CAP,
    row_cap: int | None = None,
    workers: int = 1,
) -> Iterator[SweepRow]:
    """Check the total enumeration work up front, then return a lazy iterator of rows in plan order.

    Raises:
        FqCountError: the enumeration across all rows exceeds the work cap (code: ``work_cap_exceeded``).

    """
    per_row = work_cap if row_cap is None else row_cap
    total = sum(field.q**eq.n for field, eq in rows if field.q**eq.n <= per_row)
    if total > work_cap:
        raise FqCountError("work_cap_exceeded", f"The sweep needs {total} evaluations, cap is {work_cap}.")
    logger.info("Sweep: %d rows, %d evaluations", len(rows), total)
    return (sweep_row(eq, field, restricted=restricted, row_cap=per_row, workers=workers) for field, eq in rows)
