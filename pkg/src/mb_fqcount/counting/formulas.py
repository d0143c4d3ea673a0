"""Closed-form solution counts.

Formulas whose validity rests on a hypothesis the caller must establish take ``checked``;
the dispatcher passes ``checked=True`` after evaluating the hypothesis itself.
"""

from collections.abc import Sequence

from mb_fqcount.errors import FqCountError
from mb_fqcount.field import FieldElement, FieldSpec


def _require_checked(checked: bool, name: str) -> None:
    if not checked:
        raise FqCountError("hypothesis_not_checked", f"{name} needs its hypothesis established first; pass checked=True.")


def formula_thm1(field: FieldSpec, n: int, *, checked: bool = False) -> int:
    """N[diagonal = 0] = q^(n-1) when gcd(d_j, prod(d)/d_j) = 1 for some j."""
    _require_checked(checked, "formula_thm1")
    return field.q ** (n - 1)


def formula_cor1(field: FieldSpec, n: int, *, checked: bool = False) -> int:
    """N*[diagonal = 0] = ((q-1)^n + (-1)^n*(q-1))/q when d is pairwise coprime."""
    _require_checked(checked, "formula_cor1")
    q = field.q
    return ((q - 1) ** n + (-1) ** n * (q - 1)) // q


def formula_thm2(field: FieldSpec, n: int, *, checked: bool = False) -> int:
    """N[Carlitz] = q^(n-1) + (-1)^(n-1) under the gcd condition with pairwise coprime d."""
    _require_checked(checked, "formula_thm2")
    return field.q ** (n - 1) + (-1) ** (n - 1)


def formula_baoulina(field: FieldSpec, n: int, *, checked: bool = False) -> int:
    """N[(x_1^m_1 + ... + x_n^m_n)^k = b*x_1*...*x_n] = q^(n-1) + (-1)^(n-1) under its lcm condition."""
    _require_checked(checked, "formula_baoulina")
    return field.q ** (n - 1) + (-1) ** (n - 1)


def _scaled_nonzero(q: int, nstar: int) -> int:
    if (q * nstar) % (q - 1):
        raise FqCountError("divisibility_violation", f"q*N* = {q * nstar} is not divisible by q-1 = {q - 1}.")
    return q * nstar // (q - 1)


def formula_thm3(field: FieldSpec, n: int, n_diag: int, nstar_diag: int) -> int:
    """(q-1)^(n-1) + N[diag] - q/(q-1)*N*[diag] under the gcd condition.

    Raises:
        FqCountError: q*N*[diag] not divisible by q-1 (code: ``divisibility_violation``).

    """
    q = field.q
    return (q - 1) ** (n - 1) + n_diag - _scaled_nonzero(q, nstar_diag)


def formula_quasihomog(field: FieldSpec, n: int, n0: int, nstar0: int) -> int:
    """(q-1)^(n-1) + N[f = 0] - q/(q-1)*N*[f = 0] for quasi-homogeneous f under its gcd condition.

    Raises:
        FqCountError: q*N*[f = 0] not divisible by q-1 (code: ``divisibility_violation``).

    """
    q = field.q
    return (q - 1) ** (n - 1) + n0 - _scaled_nonzero(q, nstar0)


def formula_carlitz_restricted(field: FieldSpec, n: int, nstar0: int) -> int:
    """N* of a Carlitz or quasi-homogeneous equation: (q-1)^(n-1) - N*[f = 0]/(q-1).

    The nonzero fibers are equinumerous under the gcd condition and together with the zero fiber
    exhaust (F_q*)^n.

    Raises:
        FqCountError: N*[f = 0] not divisible by q-1 (code: ``divisibility_violation``).

    """
    q = field.q
    if nstar0 % (q - 1):
        raise FqCountError("divisibility_violation", f"N* = {nstar0} is not divisible by q-1 = {q - 1}.")
    return (q - 1) ** (n - 1) - nstar0 // (q - 1)


def elementary_symmetric(values: Sequence[int], degree: int) -> int:
    """Sigma_degree(values): coefficient of z^degree in prod(1 + v*z).

    Raises:
        FqCountError: degree outside [0, len(values)] (code: ``degree_out_of_range``).

    """
    if not 0 <= degree <= len(values):
        raise FqCountError("degree_out_of_range", f"Degree {degree} is outside [0, {len(values)}].")
    coeffs = [1] + [0] * degree
    for v in values:
        for i in range(degree, 0, -1):
            coeffs[i] += v * coeffs[i - 1]
    return coeffs[degree]


def formula_thm4(field: FieldSpec, n: int, t: int, a: Sequence[FieldElement]) -> int:
    """N[Carlitz] with d_1..d_t odd and d_(t+1)..d_n even, coefficients ``a`` already in that order.

    q^(n-1) + (-1)^(n-1) + (-1)^(n-1) * sum_j eta((-1)^j) * sigma_2j(eta(a_(t+1)), ..., eta(a_n)) * q^j,
    plus eta((-1)^(n/2) * a_1*...*a_n) * q^((n-2)/2) * (q-1) when t = 0 and n is even.

    Raises:
        FqCountError: eta needed over an even field (code: ``even_characteristic_undefined``).

    """
    q = field.q
    sign = (-1) ** (n - 1)
    value = q ** (n - 1) + sign
    if t == n:
        return value
    etas = [field.quadratic_character(aj) for aj in a[t:]]
    minus_one = field.neg_index(1)
    total = sum(
        field.character_index(field.pow_index(minus_one, j)) * elementary_symmetric(etas, 2 * j) * q**j
        for j in range(1, (n - t) // 2 + 1)
    )
    value += sign * total
    if t == 0 and n % 2 == 0:
        product = field.prod_indices([field.pow_index(minus_one, n // 2), *(field.index(aj) for aj in a)])
        value += field.character_index(product) * q ** ((n - 2) // 2) * (q - 1)
    return value
