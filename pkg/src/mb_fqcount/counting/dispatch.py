"""Method selection: evaluate hypotheses, pick the strongest applicable closed form, fall back to enumeration."""

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from enum import StrEnum
from functools import partial

from mb_fqcount.counting.formulas import (
    formula_baoulina,
    formula_carlitz_restricted,
    formula_cor1,
    formula_quasihomog,
    formula_thm1,
    formula_thm2,
    formula_thm3,
    formula_thm4,
)
from mb_fqcount.counting.oracle import count_solutions, count_zeros
from mb_fqcount.equations import (
    CarlitzEquation,
    DiagonalEquation,
    Equation,
    QuasiHomogeneousEquation,
    baoulina_condition,
    carlitz_gcd_condition,
    is_unit_exponent,
    pairwise_coprime,
    quasihomog_exponent,
    quasihomogeneity_check,
    reduce_exponents,
    thm1_applicable,
    thm4_split,
)
from mb_fqcount.errors import FqCountError
from mb_fqcount.field import FieldSpec
from mb_fqcount.forms import DEFAULT_WORK_CAP
from mb_fqcount.reports import CountMethod, CountReport, Hypothesis

logger = logging.getLogger(__name__)


class MethodChoice(StrEnum):
    """How ``count`` may obtain its value."""

    AUTO = "auto"
    FORCE_BRUTE = "force-brute"
    FORCE_FORMULA = "force-formula"


@dataclass
class FormulaPlan:
    """The closed form chosen for an equation and the hypotheses evaluated to choose it.

    ``evaluate`` is None when no closed form applies. Planning is cheap apart from the
    quasi-homogeneity check; evaluating may run the oracle for sub-counts.
    """

    method: CountMethod | None
    hypotheses: list[Hypothesis] = field(default_factory=list)
    evaluate: Callable[[], int] | None = None


class _Planner:
    """Walks the hypotheses of one equation in preference order, recording each as it goes."""

    def __init__(self, field_: FieldSpec, *, restricted: bool, work_cap: int, workers: int) -> None:
        self.field = field_
        self.restricted = restricted
        self.work_cap = work_cap
        self.workers = workers
        self.hypotheses: list[Hypothesis] = []

    def record(self, name: str, holds: bool) -> bool:
        self.hypotheses.append(Hypothesis(name=name, holds=holds))
        return holds

    def done(self, method: CountMethod | None = None, evaluate: Callable[[], int] | None = None) -> FormulaPlan:
        return FormulaPlan(method=method, hypotheses=self.hypotheses, evaluate=evaluate)

    def _oracle(self, eq: Equation, restricted: bool) -> int:
        return count_solutions(eq, self.field, restricted=restricted, work_cap=self.work_cap, workers=self.workers)

    def _zeros(self, eq: QuasiHomogeneousEquation, restricted: bool) -> int:
        return count_zeros(eq, self.field, restricted=restricted, work_cap=self.work_cap, workers=self.workers)

    def diagonal_full(self, eq: DiagonalEquation) -> Callable[[], int]:
        """N[diag = 0], in closed form when some d_j is coprime to the rest."""
        d = reduce_exponents(eq, self.field).d
        if self.record("diag_thm1_applicable", thm1_applicable(d) is not None):
            return partial(formula_thm1, self.field, eq.n, checked=True)
        return partial(self._oracle, eq, False)

    def diagonal_nonzero(self, eq: DiagonalEquation) -> Callable[[], int]:
        """N*[diag = 0], in closed form when d is pairwise coprime."""
        d = reduce_exponents(eq, self.field).d
        if self.record("diag_pairwise_coprime", pairwise_coprime(d)):
            return partial(formula_cor1, self.field, eq.n, checked=True)
        return partial(self._oracle, eq, True)

    def diagonal(self, eq: DiagonalEquation) -> FormulaPlan:
        d = reduce_exponents(eq, self.field).d
        if self.restricted:
            if self.record("pairwise_coprime", pairwise_coprime(d)):
                return self.done(CountMethod.COR1, partial(formula_cor1, self.field, eq.n, checked=True))
            return self.done()
        if self.record("thm1_applicable", thm1_applicable(d) is not None):
            return self.done(CountMethod.THM1, partial(formula_thm1, self.field, eq.n, checked=True))
        return self.done()

    def carlitz(self, eq: CarlitzEquation) -> FormulaPlan:
        f, n = self.field, eq.n
        d = reduce_exponents(eq, f).d
        gcd_ok = self.record("gcd_condition", carlitz_gcd_condition(eq, f))
        coprime = self.record("pairwise_coprime", pairwise_coprime(d))
        if self.restricted:
            if not gcd_ok:
                return self.done()
            nonzero = self.diagonal_nonzero(eq.diagonal)
            return self.done(CountMethod.THM3, lambda: formula_carlitz_restricted(f, n, nonzero()))
        if gcd_ok and coprime:
            return self.done(CountMethod.THM2, partial(formula_thm2, f, n, checked=True))
        if self.record("baoulina_condition", baoulina_condition(eq, f)):
            return self.done(CountMethod.BAOULINA, partial(formula_baoulina, f, n, checked=True))
        if not gcd_ok:
            return self.done()
        split = thm4_split(d)
        self.record("thm4_split", split is not None)
        if split is not None and (split.t == n or self.record("odd_characteristic", f.q % 2 == 1)):
            return self.done(CountMethod.THM4, partial(formula_thm4, f, n, split.t, split.permute(eq.a)))
        full, nonzero = self.diagonal_full(eq.diagonal), self.diagonal_nonzero(eq.diagonal)
        return self.done(CountMethod.THM3, lambda: formula_thm3(f, n, full(), nonzero()))

    def quasihomogeneous(self, eq: QuasiHomogeneousEquation) -> FormulaPlan:
        f, n = self.field, eq.n
        if not self.record("quasi_homogeneous", quasihomogeneity_check(eq, f, work_cap=self.work_cap)):
            return self.done()
        if not self.record("quasihomog_gcd_condition", is_unit_exponent(quasihomog_exponent(eq), f.q - 1)):
            return self.done()
        if self.restricted:
            return self.done(CountMethod.QUASIHOMOG, lambda: formula_carlitz_restricted(f, n, self._zeros(eq, True)))
        return self.done(
            CountMethod.QUASIHOMOG, lambda: formula_quasihomog(f, n, self._zeros(eq, False), self._zeros(eq, True))
        )


def plan_formula(
    eq: Equation, field_: FieldSpec, *, restricted: bool = False, work_cap: int = DEFAULT_WORK_CAP, workers: int = 1
) -> FormulaPlan:
    """Evaluate the hypotheses of the closed forms for this equation and pick the first that applies.

    Carlitz preference: the gcd form with coprime d or the lcm condition, then the quadratic-character form, then the
    general form with diagonal sub-counts (by formula where possible, else by enumeration).
    """
    planner = _Planner(field_, restricted=restricted, work_cap=work_cap, workers=workers)
    if isinstance(eq, DiagonalEquation):
        return planner.diagonal(eq)
    if isinstance(eq, CarlitzEquation):
        return planner.carlitz(eq)
    return planner.quasihomogeneous(eq)


def count(
    eq: Equation,
    field_: FieldSpec,
    *,
    method: MethodChoice = MethodChoice.AUTO,
    restricted: bool = False,
    work_cap: int = DEFAULT_WORK_CAP,
    workers: int = 1,
) -> CountReport:
    """Count solutions of ``eq`` over ``field_`` and report how.

    Raises:
        FqCountError: ``no_applicable_formula`` under force-formula, ``work_cap_exceeded`` when enumeration is too large.

    """
    plan = plan_formula(eq, field_, restricted=restricted, work_cap=work_cap, workers=workers)
    hypotheses = tuple(plan.hypotheses)
    if method is not MethodChoice.FORCE_BRUTE and plan.method is not None and plan.evaluate is not None:
        logger.info("GF(%s), n=%d: method %s", field_.label, eq.n, plan.method.value)
        value = plan.evaluate()
        return CountReport(q=field_.q, n=eq.n, value=value, method=plan.method, restricted=restricted, hypotheses=hypotheses)
    if method is MethodChoice.FORCE_FORMULA:
        failed = ", ".join(h.name for h in hypotheses if not h.holds)
        raise FqCountError("no_applicable_formula", f"No closed form applies (failed: {failed or 'none'}).")
    logger.info("GF(%s), n=%d: method brute", field_.label, eq.n)
    value = count_solutions(eq, field_, restricted=restricted, work_cap=work_cap, workers=workers)
    return CountReport(q=field_.q, n=eq.n, value=value, method=CountMethod.BRUTE, restricted=restricted, hypotheses=hypotheses)
