"""Brute-force solution counting: the ground truth every closed form is checked against."""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product

from mb_fqcount.equations import CarlitzEquation, DiagonalEquation, Equation, QuasiHomogeneousEquation, reduce_exponents
from mb_fqcount.errors import FqCountError
from mb_fqcount.field import FieldSpec
from mb_fqcount.forms import DEFAULT_WORK_CAP, ConstantForm, DiagonalForm, Form, MonomialForm, PolynomialForm, PowerForm

logger = logging.getLogger(__name__)


def _count_slice(lhs: Form, rhs: Form, q: int, n: int, first: range, restricted: bool) -> int:
    """Count solutions whose first coordinate lies in ``first``."""
    domain = range(1, q) if restricted else range(q)
    count = 0
    for x1 in first:
        for rest in product(domain, repeat=n - 1):
            x = (x1, *rest)
            if lhs(x) == rhs(x):
                count += 1
    return count


def _partition(domain: range, parts: int) -> list[range]:
    """Split a range into at most ``parts`` contiguous non-empty slices."""
    size, extra = divmod(len(domain), parts)
    slices: list[range] = []
    start = domain.start
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        if stop > start:
            slices.append(range(start, stop))
        start = stop
    return slices


def brute_count(
    lhs: Form,
    rhs: Form,
    field: FieldSpec,
    n: int,
    *,
    restricted: bool = False,
    work_cap: int = DEFAULT_WORK_CAP,
    workers: int = 1,
) -> int:
    """Count x in F_q^n (or (F_q*)^n when restricted) with lhs(x) = rhs(x).

    The first coordinate's range is split into contiguous slices, one per worker; the result is the
    sum of the slice counts and does not depend on the worker count.

    Raises:
        FqCountError: q^n above the work cap (code: ``work_cap_exceeded``).

    """
    q = field.q
    if q**n > work_cap:
        raise FqCountError("work_cap_exceeded", f"Enumerating GF({field.label})^{n} needs {q**n} evaluations, cap is {work_cap}.")
    domain = range(1, q) if restricted else range(q)
    slices = _partition(domain, max(1, workers))
    logger.debug("Enumerating GF(%s)^%d (restricted=%s) in %d slice(s)", field.label, n, restricted, len(slices))
    if workers <= 1 or len(slices) <= 1:
        return sum(_count_slice(lhs, rhs, q, n, part, restricted) for part in slices)
    logger.info("Brute count over GF(%s)^%d with %d workers", field.label, n, len(slices))
    with ProcessPoolExecutor(max_workers=len(slices)) as pool:
        futures = [pool.submit(_count_slice, lhs, rhs, q, n, part, restricted) for part in slices]
        return sum(f.result() for f in futures)


def equation_forms(eq: Equation, field: FieldSpec, *, reduce: bool = True) -> tuple[Form, Form]:
    """Compile an equation into (lhs, rhs) forms.

    Diagonal equations evaluate with the reduced exponents d_j unless ``reduce`` is off; both give the same count.
    """
    if isinstance(eq, DiagonalEquation):
        exponents = reduce_exponents(eq, field).d if reduce else eq.m
        return DiagonalForm(field, [field.index(a) for a in eq.a], exponents), ConstantForm(0)
    if isinstance(eq, CarlitzEquation):
        inner = DiagonalForm(field, [field.index(a) for a in eq.a], eq.m)
        return PowerForm(field, inner, eq.k), MonomialForm(field, field.index(eq.b), eq.kv)
    return zero_form(eq, field), MonomialForm(field, field.index(eq.b), eq.kv)


def zero_form(eq: QuasiHomogeneousEquation, field: FieldSpec) -> PolynomialForm:
    """The polynomial f of a quasi-homogeneous equation."""
    return PolynomialForm(field, [(field.index(coeff), exponents) for coeff, exponents in eq.terms])


def count_solutions(
    eq: Equation,
    field: FieldSpec,
    *,
    restricted: bool = False,
    reduce: bool = True,
    work_cap: int = DEFAULT_WORK_CAP,
    workers: int = 1,
) -> int:
    """N (or N*) of an equation by enumeration."""
    lhs, rhs = equation_forms(eq, field, reduce=reduce)
    return brute_count(lhs, rhs, field, eq.n, restricted=restricted, work_cap=work_cap, workers=workers)


def count_zeros(
    eq: QuasiHomogeneousEquation,
    field: FieldSpec,
    *,
    restricted: bool = False,
    work_cap: int = DEFAULT_WORK_CAP,
    workers: int = 1,
) -> int:
    """N[f = 0] (or N*[f = 0]) for the polynomial of a quasi-homogeneous equation."""
    return brute_count(
        zero_form(eq, field), ConstantForm(0), field, eq.n, restricted=restricted, work_cap=work_cap, workers=workers
    )
