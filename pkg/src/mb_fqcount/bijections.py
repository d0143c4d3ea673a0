"""Fiber families and the explicit bijections between their fibers.

For a diagonal equation the fiber S_c holds the solutions of a_p*c*x_p^d_p + sum_{j != p} a_j*x_j^d_j = 0
and the restricted fiber S'_c those with x_p != 0 (p is the pivot variable). For a Carlitz or
quasi-homogeneous equation S_c holds the solutions of lhs(x) = b*c*x^kv and S*_c those with every
coordinate nonzero. Tuples are index tuples throughout.
"""

import logging
import math
from collections import Counter
from collections.abc import Callable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import partial
from itertools import product

from sympy.ntheory.modular import crt

from mb_fqcount.counting.oracle import equation_forms
from mb_fqcount.digest import PairingDigest
from mb_fqcount.equations import (
    CarlitzEquation,
    DiagonalEquation,
    Equation,
    QuasiHomogeneousEquation,
    carlitz_exponent,
    carlitz_gcd_condition,
    is_unit_exponent,
    quasihomog_exponent,
    quasihomogeneity_check,
    reduce_exponents,
    thm1_applicable,
)
from mb_fqcount.errors import FqCountError
from mb_fqcount.field import FieldElement, FieldSpec
from mb_fqcount.forms import DEFAULT_WORK_CAP, DiagonalForm, Form
from mb_fqcount.reports import IdentityEntry

logger = logging.getLogger(__name__)

# Certificates keep explicit pairings up to this many pairs
DEFAULT_PAIRING_LIMIT = 10**5

Point = tuple[int, ...]


class FiberKind(StrEnum):
    """Which proof the family comes from."""

    DIAG = "diag-prime-variable"
    SCALING = "carlitz-all-variables"


@dataclass(frozen=True)
class FiberFamily:
    """All fibers S_c of one equation, split into the restricted part and its complement."""

    kind: FiberKind
    field: FieldSpec
    equation: Equation
    pivot: int | None  # diag only
    d: tuple[int, ...] | None  # diag only: the exponents the fibers are built with
    restricted: Mapping[int, frozenset[Point]]  # c index -> S'_c or S*_c
    complements: Mapping[int, frozenset[Point]]  # c index -> S_c minus its restricted part
    maps_available: bool

    @property
    def n(self) -> int:
        """Number of variables."""
        return self.equation.n

    def size(self, c: int) -> int:
        """|S_c|."""
        return len(self.restricted[c]) + len(self.complements[c])


@dataclass(frozen=True)
class BijectionCertificate:
    """A verified bijection from the fiber of ``source_c`` onto the fiber of ``target_c``."""

    source_c: int
    target_c: int
    source_size: int
    target_size: int
    pairs: tuple[tuple[Point, Point], ...] | None  # None above the pairing limit
    digest: str


@dataclass(frozen=True)
class IdentityReport:
    """Results of the counting identities checked on one family."""

    checks: tuple[IdentityEntry, ...]

    @property
    def passed(self) -> bool:
        """True iff every identity holds."""
        return all(check.holds for check in self.checks)


# --- Maps ---


def crt_exponent(d1: int, rest: int) -> int:
    """Smallest positive t with t = 0 mod d1 and t = 1 mod rest.

    Raises:
        FqCountError: gcd(d1, rest) != 1 (code: ``not_coprime``).

    """
    if math.gcd(d1, rest) != 1:
        raise FqCountError("not_coprime", f"gcd({d1}, {rest}) != 1.")
    result = crt([d1, rest], [0, 1])
    t = int(result[0]) if result is not None else 0
    return t or d1 * rest


def _thm1_exponents(d: Sequence[int], t: int, pivot: int) -> tuple[int, ...]:
    exponents: list[int] = []
    for j, dj in enumerate(d):
        numerator = t if j == pivot else t - 1
        if numerator % dj:
            raise FqCountError("exponent_not_integral", f"{numerator}/{dj} is not an integer for variable {j}.")
        exponents.append(numerator // dj)
    return tuple(exponents)


def _scale(field: FieldSpec, factors: Sequence[int], x: Point) -> Point:
    return tuple(field.mul_index(s, xj) for s, xj in zip(factors, x, strict=True))


def thm1_map(field: FieldSpec, c: FieldElement, d: Sequence[int], t: int, x: Point, pivot: int = 0) -> Point:
    """(c^(t/d_p)*x_p, c^((t-1)/d_j)*x_j for j != p): sends S'_c onto S'_1.

    Raises:
        FqCountError: t inconsistent with d (code: ``exponent_not_integral``), or c = 0 or x_p = 0
            (code: ``precondition_failed``).

    """
    ci = field.index(c)
    if ci == 0 or x[pivot] == 0:
        raise FqCountError("precondition_failed", "The diagonal map needs c != 0 and a nonzero pivot coordinate.")
    exponents = _thm1_exponents(d, t, pivot)
    return _scale(field, [field.pow_index(ci, e) for e in exponents], x)


def scaling_weights(eq: CarlitzEquation | QuasiHomogeneousEquation) -> tuple[tuple[int, ...], int]:
    """Per-variable weights w_j and the exponent e = sum_j k_j*w_j - (degree of the left-hand side)."""
    if isinstance(eq, CarlitzEquation):
        big_m = math.lcm(*eq.m)
        return tuple(big_m // mj for mj in eq.m), carlitz_exponent(eq)
    return eq.rv, quasihomog_exponent(eq)


def scaling_parameter(field: FieldSpec, c: FieldElement, e: int) -> int:
    """The t in [0, q-2] with g^(-t*e) = c, where g is the field's generator.

    The scaling map multiplies the right-hand side by g^(-t*e) relative to the left-hand side.
    """
    g = field.generator_index
    base = field.element(field.pow_index(g, (-e) % (field.q - 1)))
    return field.discrete_log(base, c)


def scale_by_generator(field: FieldSpec, weights: Sequence[int], t: int, x: Point) -> Point:
    """(g^(t*w_1)*x_1, ..., g^(t*w_n)*x_n)."""
    g = field.generator_index
    return _scale(field, [field.pow_index(g, (t * w) % (field.q - 1)) for w in weights], x)


def _scaling_hypothesis(eq: CarlitzEquation | QuasiHomogeneousEquation, field: FieldSpec, work_cap: int) -> bool:
    if isinstance(eq, CarlitzEquation):
        return carlitz_gcd_condition(eq, field)
    return quasihomogeneity_check(eq, field, work_cap=work_cap) and is_unit_exponent(quasihomog_exponent(eq), field.q - 1)


def thm2_map(
    field: FieldSpec,
    c: FieldElement,
    eq: CarlitzEquation | QuasiHomogeneousEquation,
    x: Point,
    *,
    work_cap: int = DEFAULT_WORK_CAP,
) -> Point:
    """Generator-power scaling sending S*_1 onto S*_c.

    Raises:
        FqCountError: gcd(e, q-1) != 1 or f not quasi-homogeneous (code: ``hypothesis_failed``), or c = 0
            or a zero coordinate in x (code: ``precondition_failed``).

    """
    if not _scaling_hypothesis(eq, field, work_cap):
        raise FqCountError("hypothesis_failed", "The scaling exponent is not coprime to q-1.")
    if field.index(c) == 0 or 0 in x:
        raise FqCountError("precondition_failed", "The scaling map needs c != 0 and every coordinate nonzero.")
    weights, e = scaling_weights(eq)
    return scale_by_generator(field, weights, scaling_parameter(field, c, e), x)


# --- Families ---


def build_family(eq: Equation, field: FieldSpec, *, work_cap: int = DEFAULT_WORK_CAP) -> FiberFamily:
    """Enumerate every fiber S_c, testing each tuple against each c directly.

    Raises:
        FqCountError: q^(n+1) above the work cap (code: ``work_cap_exceeded``).

    """
    q, n = field.q, eq.n
    if q ** (n + 1) > work_cap:
        msg = f"Building fibers over GF({field.label})^{n} needs {q ** (n + 1)} tests, cap is {work_cap}."
        raise FqCountError("work_cap_exceeded", msg)
    if isinstance(eq, DiagonalEquation):
        return _build_diag_family(eq, field)
    return _build_scaling_family(eq, field, work_cap)


def _collect(
    field: FieldSpec, n: int, split: Callable[[Point], tuple[int, int, bool]]
) -> tuple[dict[int, frozenset[Point]], dict[int, frozenset[Point]]]:
    """Place every tuple in the fibers whose equation c*A(x) = B(x) it satisfies."""
    q = field.q
    restricted: dict[int, set[Point]] = {c: set() for c in range(q)}
    complements: dict[int, set[Point]] = {c: set() for c in range(q)}
    for x in product(range(q), repeat=n):
        scaled, other, in_domain = split(x)
        target = restricted if in_domain else complements
        for c in range(q):
            if field.mul_index(c, scaled) == other:
                target[c].add(x)
    return {c: frozenset(s) for c, s in restricted.items()}, {c: frozenset(s) for c, s in complements.items()}


def _diag_split(field: FieldSpec, form: DiagonalForm, pivot: int, x: Point) -> tuple[int, int, bool]:
    """(a_p*x_p^d_p, -sum of the other terms, x_p != 0)."""
    others = field.sum_indices(form.term(j, xj) for j, xj in enumerate(x) if j != pivot)
    return form.term(pivot, x[pivot]), field.neg_index(others), x[pivot] != 0


def _build_diag_family(eq: DiagonalEquation, field: FieldSpec) -> FiberFamily:
    d = reduce_exponents(eq, field).d
    applicable = thm1_applicable(d)
    pivot = 0 if applicable is None else applicable
    form = DiagonalForm(field, [field.index(a) for a in eq.a], d)
    restricted, complements = _collect(field, eq.n, partial(_diag_split, field, form, pivot))
    logger.debug("GF(%s): diagonal family with pivot %d, maps available: %s", field.label, pivot, applicable is not None)
    return FiberFamily(
        kind=FiberKind.DIAG,
        field=field,
        equation=eq,
        pivot=pivot,
        d=d,
        restricted=restricted,
        complements=complements,
        maps_available=applicable is not None,
    )


def _scaling_split(lhs: Form, rhs: Form, x: Point) -> tuple[int, int, bool]:
    """(b*x^kv, lhs(x), all coordinates nonzero)."""
    return rhs(x), lhs(x), 0 not in x


def _build_scaling_family(eq: CarlitzEquation | QuasiHomogeneousEquation, field: FieldSpec, work_cap: int) -> FiberFamily:
    lhs, rhs = equation_forms(eq, field)
    restricted, complements = _collect(field, eq.n, partial(_scaling_split, lhs, rhs))
    available = _scaling_hypothesis(eq, field, work_cap)
    logger.debug("GF(%s): scaling family, maps available: %s", field.label, available)
    return FiberFamily(
        kind=FiberKind.SCALING,
        field=field,
        equation=eq,
        pivot=None,
        d=None,
        restricted=restricted,
        complements=complements,
        maps_available=available,
    )


# --- Verification ---


def _family_map(family: FiberFamily, ci: int) -> tuple[int, int, list[int], list[int]]:
    """(source c, target c, forward factors, inverse factors) of the bijection attached to c."""
    field = family.field
    c_inv = field.inv_index(ci)
    if family.kind is FiberKind.DIAG:
        if family.d is None or family.pivot is None:
            raise FqCountError("precondition_failed", "Diagonal family without exponents.")
        d, pivot = family.d, family.pivot
        t = crt_exponent(d[pivot], math.prod(d) // d[pivot])
        exponents = _thm1_exponents(d, t, pivot)
        forward = [field.pow_index(ci, e) for e in exponents]
        inverse = [field.pow_index(c_inv, e) for e in exponents]
        return ci, 1, forward, inverse
    eq = family.equation
    if isinstance(eq, DiagonalEquation):
        raise FqCountError("precondition_failed", "Scaling family over a diagonal equation.")
    weights, e = scaling_weights(eq)
    t = scaling_parameter(field, field.element(ci), e)
    t_inv = scaling_parameter(field, field.element(c_inv), e)
    g = field.generator_index
    forward = [field.pow_index(g, (t * w) % (field.q - 1)) for w in weights]
    inverse = [field.pow_index(g, (t_inv * w) % (field.q - 1)) for w in weights]
    return 1, ci, forward, inverse


def verify_bijection(family: FiberFamily, c: FieldElement, *, pairing_limit: int = DEFAULT_PAIRING_LIMIT) -> BijectionCertificate:
    """Apply the family's map to every tuple of the source fiber and certify it is a bijection onto the target.

    Checks image membership, injectivity, surjectivity by cardinality, and that the map for c^(-1)
    sends every image back to its source.

    Raises:
        FqCountError: no map for this family (code: ``hypothesis_failed``), c = 0 (code: ``precondition_failed``),
            or a failed check (code: ``not_a_bijection``).

    """
    field = family.field
    ci = field.index(c)
    if ci == 0:
        raise FqCountError("precondition_failed", "Bijections are defined for c != 0 only.")
    if not family.maps_available:
        raise FqCountError("hypothesis_failed", "The hypothesis behind this family's map does not hold.")
    source_c, target_c, forward, inverse = _family_map(family, ci)
    source, target = family.restricted[source_c], family.restricted[target_c]
    keep = len(source) <= pairing_limit
    pairs: list[tuple[Point, Point]] = []
    seen: set[Point] = set()
    digest = PairingDigest()
    for x in sorted(source):
        y = _scale(field, forward, x)
        if y not in target:
            raise FqCountError("not_a_bijection", f"c={ci}: image {y} of {x} is outside the target fiber.")
        if y in seen:
            raise FqCountError("not_a_bijection", f"c={ci}: image {y} is hit twice.")
        if _scale(field, inverse, y) != x:
            raise FqCountError("not_a_bijection", f"c={ci}: the inverse map does not return {y} to {x}.")
        seen.add(y)
        digest.update(x, y)
        if keep:
            pairs.append((x, y))
    if len(seen) != len(target):
        raise FqCountError("not_a_bijection", f"c={ci}: {len(seen)} images cover a target of size {len(target)}.")
    logger.debug("GF(%s): bijection %d -> %d verified on %d tuples", field.label, source_c, target_c, len(source))
    return BijectionCertificate(
        source_c=source_c,
        target_c=target_c,
        source_size=len(source),
        target_size=len(target),
        pairs=tuple(pairs) if keep else None,
        digest=digest.hexdigest(),
    )


def _verify_index(family: FiberFamily, pairing_limit: int, ci: int) -> BijectionCertificate:
    return verify_bijection(family, family.field.element(ci), pairing_limit=pairing_limit)


def verify_all_bijections(
    family: FiberFamily, *, workers: int = 1, pairing_limit: int = DEFAULT_PAIRING_LIMIT
) -> tuple[BijectionCertificate, ...]:
    """Certificates for every c != 0, in enumeration order; c values are verified in parallel when workers > 1."""
    task = partial(_verify_index, family, pairing_limit)
    nonzero = range(1, family.field.q)
    if workers <= 1:
        return tuple(map(task, nonzero))
    logger.info("Verifying %d bijections with %d workers", len(nonzero), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return tuple(pool.map(task, nonzero))


def _identity(name: str, lhs: Fraction | int, rhs: Fraction | int) -> IdentityEntry:
    return IdentityEntry(name=name, lhs=Fraction(lhs), rhs=Fraction(rhs), holds=Fraction(lhs) == Fraction(rhs))


def verify_identities(family: FiberFamily, *, strict: bool = False) -> IdentityReport:
    """Check the counting identities of the family's proof by direct enumeration.

    Raises:
        FqCountError: an identity fails and ``strict`` is set (code: ``identity_violated``).

    """
    q, n = family.field.q, family.n
    restricted = family.restricted
    membership = Counter(x for fiber in restricted.values() for x in fiber)
    domain = (q - 1) * q ** (n - 1) if family.kind is FiberKind.DIAG else (q - 1) ** n
    s1, s0 = family.size(1), family.size(0)
    r1, r0 = len(restricted[1]), len(restricted[0])
    total = sum(len(fiber) for fiber in restricted.values())

    checks = [
        _identity("unique_fiber", sum(1 for k in membership.values() if k == 1), domain),
        _identity("complement_invariance", sum(1 for c in range(q) if family.complements[c] == family.complements[0]), q),
    ]
    if family.kind is FiberKind.DIAG:
        checks += [
            _identity("eq1", s1, r1 + s0 - r0),
            _identity("eq2", total, q ** (n - 1) * (q - 1)),
            _identity("eq4", s0, Fraction(q * r0, q - 1)),
        ]
        if family.maps_available:
            checks += [
                _identity("eq3", r1, q ** (n - 1) - Fraction(r0, q - 1)),
                _identity("thm1", s1, q ** (n - 1)),
            ]
    else:
        checks += [
            _identity("eq5", s1, r1 + s0 - r0),
            _identity("eq6", total, (q - 1) ** n),
        ]
        if family.maps_available:
            checks.append(_identity("derived", r1, (q - 1) ** (n - 1) - Fraction(r0, q - 1)))

    report = IdentityReport(checks=tuple(checks))
    failed = [check.name for check in report.checks if not check.holds]
    if failed:
        logger.warning("GF(%s): identities failed: %s", family.field.label, ", ".join(failed))
        if strict:
            raise FqCountError("identity_violated", f"Identities failed: {', '.join(failed)}.")
    return report
