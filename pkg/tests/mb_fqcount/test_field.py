"""Tests for finite field construction and arithmetic."""

import pickle
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mb_fqcount.errors import FqCountError
from mb_fqcount.field import FieldElement, FieldSpec, make_field

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 6)]


@pytest.fixture
def gf4() -> FieldSpec:
    """GF(4) with modulus x^2+x+1."""
    return make_field(2, 2)


@pytest.fixture
def gf7() -> FieldSpec:
    """The prime field GF(7)."""
    return make_field(7)


class TestMakeField:
    """Construction, validation and determinism."""

    def test_prime_field(self, gf7: FieldSpec):
        """GF(7) has modulus x and q = 7."""
        assert gf7.q == 7
        assert gf7.modulus == (0, 1)
        assert gf7.label == "7"

    def test_gf4_modulus(self, gf4: FieldSpec):
        """x^2+x+1 is the only irreducible quadratic over GF(2)."""
        assert gf4.modulus == (1, 1, 1)
        assert gf4.label == "2^2"

    def test_gf9_modulus(self):
        """x^2+1 is the smallest irreducible quadratic over GF(3)."""
        assert make_field(3, 2).modulus == (1, 0, 1)

    def test_gf8_modulus(self):
        """x^3+x+1 comes before x^3+x^2+1."""
        assert make_field(2, 3).modulus == (1, 1, 0, 1)

    def test_galois_field_shares_modulus_and_generator(self):
        """The backing galois field uses the same modulus and primitive element."""
        field = make_field(3, 2)
        gf = field.galois_field
        assert [int(c) for c in gf.irreducible_poly.coeffs] == [1, 0, 1]
        assert int(gf.primitive_element) == field.generator_index

    def test_not_prime(self):
        """Composite characteristic is rejected."""
        with pytest.raises(FqCountError) as exc_info:
            make_field(4, 1)
        assert exc_info.value.code == "not_prime"

    def test_degree_out_of_range(self):
        """s < 1 is rejected."""
        with pytest.raises(FqCountError) as exc_info:
            make_field(3, 0)
        assert exc_info.value.code == "degree_out_of_range"

    def test_field_too_large(self):
        """q above the cap is rejected."""
        with pytest.raises(FqCountError) as exc_info:
            make_field(3, 5, cap=100)
        assert exc_info.value.code == "field_too_large"

    def test_huge_degree_rejected_without_computing(self):
        """Absurd degrees fail on the cap check."""
        with pytest.raises(FqCountError) as exc_info:
            make_field(2, 10**9)
        assert exc_info.value.code == "field_too_large"

    def test_deterministic(self):
        """Repeated calls give equal fields."""
        assert make_field(3, 3) == make_field(3, 3)
        assert make_field(3, 3).modulus == make_field(3, 3).modulus

    def test_pickles_by_parameters(self):
        """A pickled field comes back equal, ready for worker processes."""
        field = make_field(5, 2)
        assert pickle.loads(pickle.dumps(field)) == field


class TestElements:
    """Enumeration order and element encoding."""

    def test_gf3(self):
        """GF(3) enumerates 0, 1, 2."""
        assert [str(a) for a in make_field(3).elements()] == ["0", "1", "2"]

    def test_gf4(self, gf4: FieldSpec):
        """Low-degree coefficient varies fastest."""
        assert [a.coeffs for a in gf4.elements()] == [(0, 0), (1, 0), (0, 1), (1, 1)]
        assert [str(a) for a in gf4.elements()] == ["0", "1", "a", "1+a"]

    def test_gf9_length(self):
        """GF(9) has 9 elements."""
        assert len(make_field(3, 2).elements()) == 9

    def test_index_matches_position(self):
        """Index of each element equals its position."""
        field = make_field(3, 2)
        assert [a.index for a in field.elements()] == list(range(9))

    def test_str_with_coefficients(self):
        """Non-unit coefficients print with '*'."""
        assert str(FieldElement(coeffs=(2, 0, 2), p=3)) == "2+2*a^2"

    def test_invalid_index(self, gf7: FieldSpec):
        """Indices outside [0, q-1] are rejected."""
        with pytest.raises(FqCountError) as exc_info:
            gf7.element(7)
        assert exc_info.value.code == "invalid_element"

    def test_foreign_element(self, gf7: FieldSpec, gf4: FieldSpec):
        """Elements of another field are rejected."""
        with pytest.raises(FqCountError) as exc_info:
            gf7.add(gf4.one, gf7.one)
        assert exc_info.value.code == "invalid_element"


class TestArithmetic:
    """add, mul, inv, pow."""

    def test_add_mod_p(self, gf7: FieldSpec):
        """3 + 5 = 1 in GF(7)."""
        assert gf7.add(gf7.element(3), gf7.element(5)) == gf7.element(1)

    def test_alpha_squared(self, gf4: FieldSpec):
        """alpha^2 = alpha + 1 in GF(4)."""
        alpha = gf4.element(2)
        assert gf4.mul(alpha, alpha) == gf4.element(3)

    def test_inv_prime(self, gf7: FieldSpec):
        """3^-1 = 5 in GF(7)."""
        assert gf7.inv(gf7.element(3)) == gf7.element(5)

    def test_inv_alpha(self, gf4: FieldSpec):
        """alpha^-1 = alpha + 1 in GF(4)."""
        assert gf4.inv(gf4.element(2)) == gf4.element(3)

    def test_inv_zero(self, gf7: FieldSpec):
        """Zero has no inverse."""
        with pytest.raises(FqCountError) as exc_info:
            gf7.inv(gf7.zero)
        assert exc_info.value.code == "division_by_zero"

    def test_pow(self, gf7: FieldSpec):
        """Fermat, 0^0 = 1, and 2^3 = 3 in GF(5)."""
        assert gf7.pow(gf7.element(3), 6) == gf7.one
        assert gf7.pow(gf7.zero, 0) == gf7.one
        gf5 = make_field(5)
        assert gf5.pow(gf5.element(2), 3) == gf5.element(3)

    def test_negative_exponent(self, gf7: FieldSpec):
        """Negative exponents are rejected."""
        with pytest.raises(FqCountError) as exc_info:
            gf7.pow(gf7.element(2), -1)
        assert exc_info.value.code == "negative_exponent"

    def test_sub_and_neg(self):
        """a - a = 0 and a + (-a) = 0 in GF(9)."""
        field = make_field(3, 2)
        for a in field.elements():
            assert field.sub(a, a) == field.zero
            assert field.add(a, field.neg(a)) == field.zero

    @pytest.mark.parametrize(("p", "s"), [f for f in SMALL_FIELDS if f[0] ** f[1] <= 16])
    def test_field_axioms(self, p: int, s: int):
        """Associativity, commutativity and distributivity hold exhaustively."""
        field = make_field(p, s)
        q = field.q
        for a, b in product(range(q), repeat=2):
            assert field.add_index(a, b) == field.add_index(b, a)
            assert field.mul_index(a, b) == field.mul_index(b, a)
        for a, b, c in product(range(q), repeat=3):
            assert field.add_index(field.add_index(a, b), c) == field.add_index(a, field.add_index(b, c))
            assert field.mul_index(field.mul_index(a, b), c) == field.mul_index(a, field.mul_index(b, c))
            assert field.mul_index(a, field.add_index(b, c)) == field.add_index(field.mul_index(a, b), field.mul_index(a, c))

    @pytest.mark.parametrize(("p", "s"), SMALL_FIELDS)
    def test_fermat(self, p: int, s: int):
        """x^q = x for all x and x^(q-1) = 1 for x != 0."""
        field = make_field(p, s)
        for x in range(field.q):
            assert field.pow_index(x, field.q) == x
            if x:
                assert field.pow_index(x, field.q - 1) == 1
                assert field.mul_index(x, field.inv_index(x)) == 1

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from(SMALL_FIELDS), st.data())
    def test_index_arithmetic_matches_galois(self, ps: tuple[int, int], data: st.DataObject):
        """Table arithmetic on indices agrees with galois field arrays."""
        field = make_field(*ps)
        gf = field.galois_field
        a = data.draw(st.integers(0, field.q - 1))
        b = data.draw(st.integers(0, field.q - 1))
        assert field.add_index(a, b) == int(gf(a) + gf(b))
        assert field.sub_index(a, b) == int(gf(a) - gf(b))
        assert field.mul_index(a, b) == int(gf(a) * gf(b))
        assert field.pow_index(a, b) == int(gf(a) ** b)


class TestGenerator:
    """Primitive elements."""

    @pytest.mark.parametrize(("p", "expected"), [(7, 3), (2, 1), (5, 2)])
    def test_prime_fields(self, p: int, expected: int):
        """First element of full order."""
        assert make_field(p).generator() == make_field(p).element(expected)

    def test_gf9(self):
        """1 + alpha generates GF(9)*."""
        assert make_field(3, 2).generator_index == 4

    @pytest.mark.parametrize(("p", "s"), SMALL_FIELDS)
    def test_powers_cover_nonzero(self, p: int, s: int):
        """g^0 .. g^(q-2) are all nonzero elements."""
        field = make_field(p, s)
        g = field.generator_index
        assert {field.pow_index(g, k) for k in range(field.q - 1)} == set(range(1, field.q))


class TestQuadraticCharacter:
    """Euler's criterion."""

    def test_values(self, gf7: FieldSpec):
        """eta(2) = 1, eta(3) = -1, eta(0) = 0 in GF(7)."""
        assert gf7.quadratic_character(gf7.element(2)) == 1
        assert gf7.quadratic_character(gf7.element(3)) == -1
        assert gf7.quadratic_character(gf7.zero) == 0

    def test_even_field(self, gf4: FieldSpec):
        """Undefined in characteristic 2."""
        with pytest.raises(FqCountError) as exc_info:
            gf4.quadratic_character(gf4.one)
        assert exc_info.value.code == "even_characteristic_undefined"

    @pytest.mark.parametrize(("p", "s"), [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (7, 2)])
    def test_multiplicative(self, p: int, s: int):
        """eta(xy) = eta(x)eta(y) and half the nonzero elements are squares."""
        field = make_field(p, s)
        q = field.q
        for x, y in product(range(q), repeat=2):
            assert field.character_index(field.mul_index(x, y)) == field.character_index(x) * field.character_index(y)
        assert sum(1 for x in range(1, q) if field.character_index(x) == 1) == (q - 1) // 2


class TestDiscreteLog:
    """Linear-scan discrete logarithm."""

    def test_values(self, gf7: FieldSpec):
        """log_3(1) = 0, log_3(6) = 3."""
        g = gf7.element(3)
        assert gf7.discrete_log(g, gf7.one) == 0
        assert gf7.discrete_log(g, gf7.element(6)) == 3

    def test_zero(self, gf7: FieldSpec):
        """Zero has no logarithm."""
        with pytest.raises(FqCountError) as exc_info:
            gf7.discrete_log(gf7.element(3), gf7.zero)
        assert exc_info.value.code == "zero_argument"

    def test_not_a_generator(self, gf7: FieldSpec):
        """2 has order 3 in GF(7) and never reaches 3."""
        with pytest.raises(FqCountError) as exc_info:
            gf7.discrete_log(gf7.element(2), gf7.element(3))
        assert exc_info.value.code == "not_a_generator"
