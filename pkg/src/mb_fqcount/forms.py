"""Compiled polynomial forms over index-encoded field elements.

A form maps a tuple of element indices (x_1, ..., x_n) to the index of its value. Per-variable
power tables are computed once at construction, so evaluation inside enumeration loops is
table lookups plus one field sum or product.
"""

from collections.abc import Sequence
from itertools import chain
from operator import getitem
from typing import Protocol

from mb_fqcount.field import FieldSpec

# Work limits are counted in tuple evaluations, not wall time
DEFAULT_WORK_CAP = 10**8


class Form(Protocol):
    """Anything that evaluates an index tuple to an element index."""

    def __call__(self, x: Sequence[int]) -> int:
        """Evaluate at x."""
        ...


class ConstantForm:
    """The constant polynomial."""

    def __init__(self, value: int) -> None:
        """Initialize with the index of the constant."""
        self.value = value

    def __call__(self, x: Sequence[int]) -> int:
        """Return the constant."""
        return self.value


class DiagonalForm:
    """a_1*x_1^m_1 + ... + a_n*x_n^m_n."""

    def __init__(self, field: FieldSpec, coeffs: Sequence[int], exponents: Sequence[int]) -> None:
        """Precompute a_j * x^m_j for every x and every variable.

        Args:
            field: The field.
            coeffs: Coefficient indices a_j.
            exponents: Exponents m_j.

        """
        self._field = field
        self._terms = tuple(
            tuple(field.mul_index(a, v) for v in field.power_table(m)) for a, m in zip(coeffs, exponents, strict=True)
        )

    def __call__(self, x: Sequence[int]) -> int:
        """Evaluate the sum."""
        return self._field.sum_indices(map(getitem, self._terms, x))

    def term(self, j: int, xj: int) -> int:
        """Value of the j-th summand alone."""
        return self._terms[j][xj]


class PowerForm:
    """An inner form raised to a fixed power."""

    def __init__(self, field: FieldSpec, inner: Form, exponent: int) -> None:
        """Precompute y^exponent for every y."""
        self._inner = inner
        self._table = field.power_table(exponent)

    def __call__(self, x: Sequence[int]) -> int:
        """Evaluate inner(x)^exponent."""
        return self._table[self._inner(x)]


class MonomialForm:
    """b * x_1^k_1 * ... * x_n^k_n."""

    def __init__(self, field: FieldSpec, coeff: int, exponents: Sequence[int]) -> None:
        """Precompute x^k_j for every x and every variable.

        Args:
            field: The field.
            coeff: Coefficient index b.
            exponents: Non-negative exponents k_j.

        """
        self._field = field
        self._coeff = coeff
        self._tables = tuple(field.power_table(k) for k in exponents)

    def __call__(self, x: Sequence[int]) -> int:
        """Evaluate the monomial."""
        return self._field.prod_indices(chain((self._coeff,), map(getitem, self._tables, x)))


class PolynomialForm:
    """A sum of monomials."""

    def __init__(self, field: FieldSpec, terms: Sequence[tuple[int, Sequence[int]]]) -> None:
        """Compile each (coefficient index, exponent vector) term into a MonomialForm."""
        self._field = field
        self._monomials = tuple(MonomialForm(field, coeff, exponents) for coeff, exponents in terms)

    def __call__(self, x: Sequence[int]) -> int:
        """Evaluate the sum of all terms."""
        return self._field.sum_indices(m(x) for m in self._monomials)
