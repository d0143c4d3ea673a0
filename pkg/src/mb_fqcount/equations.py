"""Equation families, derived exponent quantities, and the hypothesis checkers for every closed form."""

import logging
import math
import random
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations, product

from mb_fqcount.errors import FqCountError
from mb_fqcount.field import FieldElement, FieldSpec
from mb_fqcount.forms import DEFAULT_WORK_CAP, PolynomialForm

logger = logging.getLogger(__name__)


# Random (c, x) pairs tried when exhaustive quasi-homogeneity checking exceeds the work cap
QUASIHOMOG_SAMPLE_SIZE = 1000


def _invalid(message: str) -> FqCountError:
    return FqCountError("invalid_equation", message)


def _check_common(n: int, coeffs: Sequence[FieldElement], name: str) -> None:
    if n < 2:
        raise _invalid(f"Equation needs at least 2 variables, got {n}.")
    if len(coeffs) != n:
        raise _invalid(f"Expected {n} values for '{name}', got {len(coeffs)}.")
    if any(a.is_zero for a in coeffs):
        raise _invalid(f"Coefficients '{name}' must be nonzero.")


def _check_positive(values: Sequence[int], n: int, name: str) -> None:
    if len(values) != n:
        raise _invalid(f"Expected {n} values for '{name}', got {len(values)}.")
    if any(v < 1 for v in values):
        raise _invalid(f"Values of '{name}' must be positive integers.")


@dataclass(frozen=True)
class DiagonalEquation:
    """a_1*x_1^m_1 + ... + a_n*x_n^m_n = 0."""

    a: tuple[FieldElement, ...]
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate variable count, nonzero coefficients and positive exponents."""
        _check_common(len(self.a), self.a, "a")
        _check_positive(self.m, len(self.a), "m")

    @property
    def n(self) -> int:
        """Number of variables."""
        return len(self.a)


@dataclass(frozen=True)
class CarlitzEquation:
    """(a_1*x_1^m_1 + ... + a_n*x_n^m_n)^k = b * x_1^k_1 * ... * x_n^k_n."""

    a: tuple[FieldElement, ...]
    m: tuple[int, ...]
    k: int
    b: FieldElement
    kv: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate shape and positivity."""
        _check_common(len(self.a), self.a, "a")
        _check_positive(self.m, self.n, "m")
        _check_positive(self.kv, self.n, "kv")
        if self.k < 1:
            raise _invalid("Outer power k must be a positive integer.")
        if self.b.is_zero:
            raise _invalid("Coefficient b must be nonzero.")

    @property
    def n(self) -> int:
        """Number of variables."""
        return len(self.a)

    @property
    def diagonal(self) -> DiagonalEquation:
        """The diagonal equation a_1*x_1^m_1 + ... + a_n*x_n^m_n = 0 inside the left-hand side."""
        return DiagonalEquation(a=self.a, m=self.m)


@dataclass(frozen=True)
class QuasiHomogeneousEquation:
    """f(x_1, ..., x_n) = b * x_1^k_1 * ... * x_n^k_n with f given by its terms and weights r_j, degree r.

    A constant term is accepted at construction so that ``quasihomogeneity_check`` can report it.
    """

    terms: tuple[tuple[FieldElement, tuple[int, ...]], ...]
    r: int
    rv: tuple[int, ...]
    b: FieldElement
    kv: tuple[int, ...]

    def __post_init__(self) -> None:
        """Validate terms, weights and the monomial side."""
        n = len(self.rv)
        if n < 2:
            raise _invalid(f"Equation needs at least 2 variables, got {n}.")
        _check_positive(self.rv, n, "rv")
        _check_positive(self.kv, n, "kv")
        if self.r < 1:
            raise _invalid("Degree r must be a positive integer.")
        if self.b.is_zero:
            raise _invalid("Coefficient b must be nonzero.")
        if not self.terms:
            raise _invalid("Polynomial f needs at least one term.")
        seen: set[tuple[int, ...]] = set()
        for coeff, exponents in self.terms:
            if coeff.is_zero:
                raise _invalid("Term coefficients must be nonzero.")
            if len(exponents) != n or any(e < 0 for e in exponents):
                raise _invalid(f"Term exponents {exponents} must be {n} non-negative integers.")
            if exponents in seen:
                raise _invalid(f"Duplicate term exponents {exponents}.")
            seen.add(exponents)

    @property
    def n(self) -> int:
        """Number of variables."""
        return len(self.rv)


Equation = DiagonalEquation | CarlitzEquation | QuasiHomogeneousEquation


@dataclass(frozen=True, slots=True)
class DerivedQuantities:
    """d_j = gcd(m_j, q-1), M = lcm(m), D = lcm(d)."""

    d: tuple[int, ...]
    M: int  # noqa: N815
    D: int  # noqa: N815


def reduce_exponents(eq: DiagonalEquation | CarlitzEquation, field: FieldSpec) -> DerivedQuantities:
    """Reduced exponents d_j and the lcms M, D."""
    d = tuple(math.gcd(m, field.q - 1) for m in eq.m)
    return DerivedQuantities(d=d, M=math.lcm(*eq.m), D=math.lcm(*d))


def thm1_applicable(d: Sequence[int]) -> int | None:
    """Smallest (0-based) j with gcd(d_j, prod(d)/d_j) = 1, or None."""
    total = math.prod(d)
    for j, dj in enumerate(d):
        if math.gcd(dj, total // dj) == 1:
            return j
    return None


def pairwise_coprime(d: Sequence[int]) -> bool:
    """True iff gcd(d_i, d_j) = 1 for all i < j."""
    return all(math.gcd(x, y) == 1 for x, y in combinations(d, 2))


def is_unit_exponent(e: int, modulus: int) -> bool:
    """gcd(|e|, modulus) = 1 with gcd(0, x) = x."""
    return math.gcd(abs(e), modulus) == 1


def carlitz_exponent(eq: CarlitzEquation) -> int:
    """Sum_j k_j*M/m_j - k*M over the integers (may be zero or negative)."""
    big_m = math.lcm(*eq.m)
    return sum(kj * big_m // mj for kj, mj in zip(eq.kv, eq.m, strict=True)) - eq.k * big_m


def carlitz_gcd_condition(eq: CarlitzEquation, field: FieldSpec) -> bool:
    """gcd(Sum_j k_j*M/m_j - k*M, q-1) = 1."""
    return is_unit_exponent(carlitz_exponent(eq), field.q - 1)


def pzc_condition(eq: CarlitzEquation, field: FieldSpec) -> bool:
    """The product-form condition gcd(Sum_j k_j*P/m_j - k*P, q-1) = 1 with P = m_1*...*m_n."""
    big_p = math.prod(eq.m)
    e = sum(kj * big_p // mj for kj, mj in zip(eq.kv, eq.m, strict=True)) - eq.k * big_p
    return is_unit_exponent(e, field.q - 1)


def conditions_equivalence(eq: CarlitzEquation, field: FieldSpec) -> bool:
    """Whether the product-form condition agrees with (gcd condition and pairwise coprime d); always True."""
    d = reduce_exponents(eq, field).d
    return pzc_condition(eq, field) == (carlitz_gcd_condition(eq, field) and pairwise_coprime(d))


@dataclass(frozen=True, slots=True)
class Thm4Split:
    """Stable reordering placing odd d_j first; ``t`` counts the odd ones."""

    t: int
    permutation: tuple[int, ...]  # position i holds original variable permutation[i]

    def permute[T](self, values: Sequence[T]) -> tuple[T, ...]:
        """Reorder a per-variable vector the same way."""
        return tuple(values[i] for i in self.permutation)


def thm4_split(d: Sequence[int]) -> Thm4Split | None:
    """Split d into odd and even parts; None unless d_1..d_t, d_{t+1}/2..d_n/2 are pairwise coprime."""
    odd = [j for j, dj in enumerate(d) if dj % 2]
    even = [j for j, dj in enumerate(d) if not dj % 2]
    if not pairwise_coprime([d[j] for j in odd] + [d[j] // 2 for j in even]):
        return None
    return Thm4Split(t=len(odd), permutation=tuple(odd + even))


def baoulina_condition(eq: CarlitzEquation, field: FieldSpec) -> bool:
    """gcd(Sum M/m_j - k*M, (q-1)/D) = 1 and d pairwise coprime, for equations with all a_j = 1 and k_j = 1."""
    if any(field.index(a) != 1 for a in eq.a) or any(kj != 1 for kj in eq.kv):
        return False
    derived = reduce_exponents(eq, field)
    e = sum(derived.M // mj for mj in eq.m) - eq.k * derived.M
    return is_unit_exponent(e, (field.q - 1) // derived.D) and pairwise_coprime(derived.d)


def quasihomog_exponent(eq: QuasiHomogeneousEquation) -> int:
    """Sum_j k_j*r_j - r over the integers."""
    return sum(kj * rj for kj, rj in zip(eq.kv, eq.rv, strict=True)) - eq.r


def reduced_terms(eq: QuasiHomogeneousEquation, field: FieldSpec) -> dict[tuple[int, ...], int]:
    """Terms of f as a function on F_q^n: exponents e > 0 folded into [1, q-1], equal monomials merged, zeros dropped."""
    merged: dict[tuple[int, ...], int] = {}
    for coeff, exponents in eq.terms:
        key = tuple((e - 1) % (field.q - 1) + 1 if e > 0 else 0 for e in exponents)
        merged[key] = field.add_index(merged.get(key, 0), field.index(coeff))
    return {key: value for key, value in merged.items() if value != 0}


def _structurally_quasihomogeneous(eq: QuasiHomogeneousEquation, field: FieldSpec) -> bool:
    terms = reduced_terms(eq, field)
    if any(not any(key) for key in terms):
        return False
    modulus = field.q - 1
    return all((sum(r * e for r, e in zip(eq.rv, key, strict=True)) - eq.r) % modulus == 0 for key in terms)


def _scaling_holds(eq: QuasiHomogeneousEquation, field: FieldSpec, f: PolynomialForm, c: int, x: Sequence[int]) -> bool:
    scaled = [field.mul_index(field.pow_index(c, r), xj) for r, xj in zip(eq.rv, x, strict=True)]
    return f(scaled) == field.mul_index(field.pow_index(c, eq.r), f(x))


def quasihomogeneity_check(
    eq: QuasiHomogeneousEquation, field: FieldSpec, *, work_cap: int = DEFAULT_WORK_CAP, seed: int = 0
) -> bool:
    """True iff f(c^r_1*x_1, ..., c^r_n*x_n) = c^r*f(x) for every c in F_q.

    Decided structurally and cross-checked by evaluation: exhaustively when q^(n+1) fits the work cap,
    otherwise on a seeded random sample of (c, x) pairs.

    Raises:
        FqCountError: The two methods disagree (code: ``internal_inconsistency``).

    """
    structural = _structurally_quasihomogeneous(eq, field)
    f = PolynomialForm(field, [(field.index(coeff), exponents) for coeff, exponents in eq.terms])
    q, n = field.q, eq.n
    exhaustive = q ** (n + 1) <= work_cap
    if exhaustive:
        pairs = ((c, x) for c in range(q) for x in product(range(q), repeat=n))
    else:
        rng = random.Random(seed)
        pairs = ((rng.randrange(q), tuple(rng.randrange(q) for _ in range(n))) for _ in range(QUASIHOMOG_SAMPLE_SIZE))
    evaluated = all(_scaling_holds(eq, field, f, c, x) for c, x in pairs)
    # A sample can miss a violation, so only exhaustive runs may contradict a negative structural answer
    if evaluated != structural and (exhaustive or structural):
        msg = f"Quasi-homogeneity over GF({field.label}): structural={structural}, evaluated={evaluated}."
        raise FqCountError("internal_inconsistency", msg)
    logger.debug("Quasi-homogeneity over GF(%s): %s (exhaustive=%s)", field.label, structural, exhaustive)
    return structural


def quasihomog_gcd_condition(eq: QuasiHomogeneousEquation, field: FieldSpec, *, work_cap: int = DEFAULT_WORK_CAP) -> bool:
    """gcd(Sum_j k_j*r_j - r, q-1) = 1.

    Raises:
        FqCountError: f is not quasi-homogeneous with the given weights (code: ``not_quasi_homogeneous``).

    """
    if not quasihomogeneity_check(eq, field, work_cap=work_cap):
        raise FqCountError("not_quasi_homogeneous", "f is not quasi-homogeneous with the given weights.")
    return is_unit_exponent(quasihomog_exponent(eq), field.q - 1)


def classical_carlitz(field: FieldSpec, n: int, b: FieldElement) -> CarlitzEquation:
    """(x_1 + ... + x_n)^2 = b * x_1 * ... * x_n."""
    ones = (1,) * n
    return CarlitzEquation(a=(field.one,) * n, m=ones, k=2, b=b, kv=ones)


def diagonal_as_quasihomogeneous(eq: DiagonalEquation, b: FieldElement, kv: Sequence[int]) -> QuasiHomogeneousEquation:
    """f = a_1*x_1^m_1 + ... + a_n*x_n^m_n with weights M/m_j and degree M, against b * x^kv."""
    big_m = math.lcm(*eq.m)
    terms = tuple((a, tuple(mj if i == j else 0 for i in range(eq.n))) for j, (a, mj) in enumerate(zip(eq.a, eq.m, strict=True)))
    return QuasiHomogeneousEquation(terms=terms, r=big_m, rv=tuple(big_m // mj for mj in eq.m), b=b, kv=tuple(kv))
