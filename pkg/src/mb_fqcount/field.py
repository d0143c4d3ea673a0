"""Exact arithmetic in GF(p) and GF(p^s), backed by the ``galois`` package.

An element is encoded by its index in the enumeration order: the coefficient vector
(c_0, ..., c_{s-1}) maps to c_0 + c_1*p + ... + c_{s-1}*p^(s-1), so zero is index 0 and one is index 1.
This is the integer representation of galois field arrays. The public operations take and return
FieldElement values; the ``*_index`` methods are the hot-path equivalents used by the counting oracle
and the bijection engine, running on exp/log/Zech tables filled from galois once per field.
"""

import logging
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from operator import xor
from typing import Literal

import galois
import numpy as np
from sympy import isprime

from mb_fqcount.errors import FqCountError

logger = logging.getLogger(__name__)

DEFAULT_FIELD_CAP = 2**20

CharValue = Literal[-1, 0, 1]


@dataclass(frozen=True, slots=True)
class FieldElement:
    """One element of GF(p^s) as a coefficient vector, low degree first."""

    coeffs: tuple[int, ...]
    p: int

    @property
    def index(self) -> int:
        """Position of the element in the field's enumeration order."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * self.p + c
        return result

    @property
    def is_zero(self) -> bool:
        """Check if every coefficient is zero."""
        return not any(self.coeffs)

    def __str__(self) -> str:
        """Render as ``c0+c1*a+c2*a^2``, skipping zero coefficients."""
        parts: list[str] = []
        for degree, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if degree == 0:
                parts.append(str(c))
                continue
            power = "a" if degree == 1 else f"a^{degree}"
            parts.append(power if c == 1 else f"{c}*{power}")
        return "+".join(parts) or "0"


@dataclass(frozen=True, slots=True)
class _Tables:
    """Index tables of an extension field with respect to its generator g."""

    exp: tuple[int, ...]  # exp[k] = g^k
    log: tuple[int, ...]  # log[x] = k with g^k = x; log[0] = -1
    zech: tuple[int, ...]  # zech[k] = log(1 + g^k), -1 where 1 + g^k = 0


@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^s) defined by a fixed monic irreducible modulus (coefficients low to high)."""

    p: int
    s: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self) -> None:
        """Derive q = p^s."""
        object.__setattr__(self, "q", self.p**self.s)

    def __reduce__(self) -> tuple[Callable[[int, int], FieldSpec], tuple[int, int]]:
        """Pickle as (p, s): workers rebuild the field and its tables on their side."""
        return _build_field, (self.p, self.s)

    @property
    def label(self) -> str:
        """Field notation used on the command line: ``7`` or ``3^2``."""
        return str(self.p) if self.s == 1 else f"{self.p}^{self.s}"

    @cached_property
    def galois_field(self) -> type[galois.FieldArray]:
        """The galois field class with the same modulus and generator."""
        if self.s == 1:
            return galois.GF(self.p, primitive_element=self.generator_index)
        return galois.GF(self.q, irreducible_poly=self._modulus_poly, primitive_element=self.generator_index)

    # --- Elements ---

    def element(self, index: int) -> FieldElement:
        """Return the element at a position of the enumeration order.

        Raises:
            FqCountError: Index outside [0, q-1] (code: ``invalid_element``).

        """
        if not 0 <= index < self.q:
            raise FqCountError("invalid_element", f"Element index {index} is outside GF({self.label}) (0..{self.q - 1}).")
        digits = []
        for _ in range(self.s):
            index, c = divmod(index, self.p)
            digits.append(c)
        return FieldElement(coeffs=tuple(digits), p=self.p)

    def index(self, a: FieldElement) -> int:
        """Return the enumeration index of an element after validating it belongs to this field.

        Raises:
            FqCountError: Malformed element (code: ``invalid_element``).

        """
        if a.p != self.p or len(a.coeffs) != self.s or any(not 0 <= c < self.p for c in a.coeffs):
            raise FqCountError("invalid_element", f"{a.coeffs} is not an element of GF({self.label}).")
        return a.index

    def elements(self) -> tuple[FieldElement, ...]:
        """All q elements in enumeration order: lexicographic, low-degree coefficient fastest, zero first."""
        return tuple(self.element(i) for i in range(self.q))

    @property
    def zero(self) -> FieldElement:
        """Additive identity."""
        return self.element(0)

    @property
    def one(self) -> FieldElement:
        """Multiplicative identity."""
        return self.element(1)

    # --- Element arithmetic ---

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Return a + b."""
        return self.element(self.add_index(self.index(a), self.index(b)))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Return a - b."""
        return self.element(self.sub_index(self.index(a), self.index(b)))

    def neg(self, a: FieldElement) -> FieldElement:
        """Return -a."""
        return self.element(self.neg_index(self.index(a)))

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        """Return a * b reduced modulo the modulus polynomial."""
        return self.element(self.mul_index(self.index(a), self.index(b)))

    def inv(self, a: FieldElement) -> FieldElement:
        """Return the multiplicative inverse of a.

        Raises:
            FqCountError: a is zero (code: ``division_by_zero``).

        """
        return self.element(self.inv_index(self.index(a)))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """Return a^e, with a^0 = 1 for every a including zero.

        Raises:
            FqCountError: e < 0 (code: ``negative_exponent``).

        """
        return self.element(self.pow_index(self.index(a), e))

    # --- Index arithmetic ---

    def add_index(self, i: int, j: int) -> int:
        """Add two elements given by index."""
        if self.s == 1:
            return (i + j) % self.p
        if self.p == 2:
            return i ^ j
        if i == 0:
            return j
        if j == 0:
            return i
        # g^a + g^b = g^a * (1 + g^(b-a))
        t = self._tables
        z = t.zech[(t.log[j] - t.log[i]) % (self.q - 1)]
        if z < 0:
            return 0
        return t.exp[(t.log[i] + z) % (self.q - 1)]

    def neg_index(self, i: int) -> int:
        """Negate an element given by index."""
        if self.s == 1:
            return -i % self.p
        if self.p == 2 or i == 0:
            return i
        # -1 = g^((q-1)/2) in odd characteristic
        t = self._tables
        return t.exp[(t.log[i] + (self.q - 1) // 2) % (self.q - 1)]

    def sub_index(self, i: int, j: int) -> int:
        """Subtract two elements given by index."""
        return self.add_index(i, self.neg_index(j))

    def mul_index(self, i: int, j: int) -> int:
        """Multiply two elements given by index."""
        if self.s == 1:
            return i * j % self.p
        if i == 0 or j == 0:
            return 0
        t = self._tables
        return t.exp[(t.log[i] + t.log[j]) % (self.q - 1)]

    def inv_index(self, i: int) -> int:
        """Invert a nonzero element given by index.

        Raises:
            FqCountError: i is zero (code: ``division_by_zero``).

        """
        if i == 0:
            raise FqCountError("division_by_zero", "Zero has no multiplicative inverse.")
        if self.s == 1:
            return pow(i, self.p - 2, self.p)
        t = self._tables
        return t.exp[-t.log[i] % (self.q - 1)]

    def pow_index(self, i: int, e: int) -> int:
        """Raise an element given by index to a non-negative power.

        Raises:
            FqCountError: e < 0 (code: ``negative_exponent``).

        """
        if e < 0:
            raise FqCountError("negative_exponent", f"Exponent {e} is negative.")
        if self.s == 1:
            return pow(i, e, self.p)
        if e == 0:
            return 1
        if i == 0:
            return 0
        t = self._tables
        return t.exp[t.log[i] * e % (self.q - 1)]

    def sum_indices(self, values: Iterable[int]) -> int:
        """Sum many elements given by index."""
        if self.s == 1:
            return sum(values) % self.p
        if self.p == 2:
            return reduce(xor, values, 0)
        return reduce(self.add_index, values, 0)

    def prod_indices(self, values: Iterable[int]) -> int:
        """Multiply many elements given by index."""
        if self.s == 1:
            result = 1
            for v in values:
                result = result * v % self.p
            return result
        t = self._tables
        total = 0
        for v in values:
            if v == 0:
                return 0
            total += t.log[v]
        return t.exp[total % (self.q - 1)]

    def power_table(self, e: int) -> tuple[int, ...]:
        """Return x^e for every x in enumeration order."""
        return tuple(self.pow_index(x, e) for x in range(self.q))

    # --- Multiplicative structure ---

    def generator(self) -> FieldElement:
        """Return the first element in enumeration order whose multiplicative order is q-1."""
        return self.element(self.generator_index)

    @cached_property
    def generator_index(self) -> int:
        """Index of the generator returned by ``generator``."""
        if self.s == 1:
            g = int(galois.primitive_root(self.p))
        else:
            g = int(galois.primitive_element(self._modulus_poly, method="min"))
        logger.debug("GF(%s): generator %s", self.label, self.element(g))
        return g

    def quadratic_character(self, x: FieldElement) -> CharValue:
        """Return eta(x): 0 for zero, +1 for nonzero squares, -1 otherwise.

        Raises:
            FqCountError: q is even (code: ``even_characteristic_undefined``).

        """
        return self.character_index(self.index(x))

    def character_index(self, i: int) -> CharValue:
        """Quadratic character of an element given by index.

        Raises:
            FqCountError: q is even (code: ``even_characteristic_undefined``).

        """
        if self.q % 2 == 0:
            raise FqCountError("even_characteristic_undefined", f"The quadratic character is undefined on GF({self.label}).")
        if i == 0:
            return 0
        return 1 if self._squares[i] else -1

    def discrete_log(self, g: FieldElement, x: FieldElement) -> int:
        """Return the unique t in [0, q-2] with g^t = x.

        Raises:
            FqCountError: x is zero (code: ``zero_argument``) or g does not generate the
                multiplicative group (code: ``not_a_generator``).

        """
        gi, xi = self.index(g), self.index(x)
        if xi == 0:
            raise FqCountError("zero_argument", "Zero has no discrete logarithm.")
        gf = self.galois_field
        if gi == 0 or int(gf(gi).multiplicative_order()) != self.q - 1:
            raise FqCountError("not_a_generator", f"{g} does not generate GF({self.label})*.")
        return int(gf(xi).log(gf(gi)))

    # --- Private helpers ---

    @property
    def _modulus_poly(self) -> galois.Poly:
        """The modulus as a galois polynomial over GF(p)."""
        return galois.Poly(list(reversed(self.modulus)), field=galois.GF(self.p))

    @cached_property
    def _tables(self) -> _Tables:
        """Exp, log and Zech tables of an extension field, computed with galois arithmetic."""
        gf = self.galois_field
        powers = gf(self.generator_index) ** np.arange(self.q - 1)
        exp = tuple(int(v) for v in powers)
        log = (-1, *(int(k) for k in gf.Range(1, self.q).log()))
        zech = tuple(log[int(v)] for v in powers + gf.Ones(self.q - 1))
        logger.debug("GF(%s): built exp/log/Zech tables", self.label)
        return _Tables(exp=exp, log=log, zech=zech)

    @cached_property
    def _squares(self) -> tuple[bool, ...]:
        """Whether each element, in enumeration order, is a square."""
        return tuple(bool(v) for v in self.galois_field.elements.is_square())


def _find_modulus(p: int, s: int) -> tuple[int, ...]:
    """Smallest monic irreducible polynomial of degree s over GF(p), by index of its lower coefficients."""
    if s == 1:
        return (0, 1)
    # galois orders polynomials by integer representation, which for monic degree-s polynomials is
    # the index order of the lower coefficients
    poly = galois.irreducible_poly(p, s, method="min")
    return tuple(int(c) for c in reversed(poly.coeffs))


@lru_cache(maxsize=None)
def _build_field(p: int, s: int) -> FieldSpec:
    """Construct GF(p^s) without validation or cap; cached so every caller shares one instance."""
    result = FieldSpec(p=p, s=s, modulus=_find_modulus(p, s))
    logger.debug("Built GF(%s) with modulus %s", result.label, result.modulus)
    return result


def make_field(p: int, s: int = 1, cap: int = DEFAULT_FIELD_CAP) -> FieldSpec:
    """Return GF(p^s) with its deterministic modulus.

    Raises:
        FqCountError: p not prime (code: ``not_prime``), s < 1 (code: ``degree_out_of_range``),
            or p^s above the cap (code: ``field_too_large``).

    """
    if not isprime(p):
        raise FqCountError("not_prime", f"{p} is not prime.")
    if s < 1:
        raise FqCountError("degree_out_of_range", f"Extension degree {s} must be at least 1.")
    if s > cap.bit_length() or p**s > cap:
        raise FqCountError("field_too_large", f"GF({p}^{s}) exceeds the enumeration cap of {cap} elements.")
    return _build_field(p, s)
