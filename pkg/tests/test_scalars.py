from fractions import Fraction

import pytest
from hypothesis import given, settings

from mpweyl.errors import DivisionByZero, IndexOutOfRange, ZeroInput
from mpweyl.expression import parse_scalar
from mpweyl.scalars import (
    coefficient_field,
    coerce,
    field_op,
    laurent_monomial,
    monomial_of,
    quantum_integer,
    r,
    ratio_as_signed_power,
    s,
    scalar_payload,
    scalar_text,
    specialize_uniform,
)
from tests.strategies import scalars


class TestFieldOps:
    def test_inverse_law(self):
        assert field_op("mul", r(1, 1), field_op("inv", r(1, 1))) == 1

    def test_self_division(self):
        d = r(1, 1) ** 2 - s(1, 1) ** 2
        assert field_op("div", d, d) == 1

    def test_fraction_is_reduced(self):
        ri, si = r(1, 1), s(1, 1)
        x = (ri**4 - si**4) / (ri**2 - si**2)
        assert field_op("mul", x, coerce(1, 1)) == ri**2 + si**2
        assert x.denom == 1

    def test_division_by_zero(self, K1):
        with pytest.raises(DivisionByZero):
            field_op("div", r(1, 1), K1.zero)
        with pytest.raises(ZeroDivisionError):
            field_op("inv", K1.zero)

    def test_eq(self):
        ri, si = r(1, 1), s(1, 1)
        assert field_op("eq", (ri + si) ** 2, ri**2 + 2 * ri * si + si**2) is True
        assert field_op("eq", ri, si) is False

    @settings(deadline=None, max_examples=40)
    @given(scalars(), scalars(), scalars())
    def test_field_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * field_op("inv", a) == 1


class TestQuantumInteger:
    def test_small_values(self):
        ri, si = r(1, 1), s(1, 1)
        assert quantum_integer(1, 1, 0) == 0
        assert quantum_integer(1, 1, 1) == 1
        assert quantum_integer(1, 1, 2) == ri**2 + si**2

    @pytest.mark.parametrize("k", range(1, 21))
    def test_matches_closed_sum(self, k):
        ri, si = r(2, 2), s(2, 2)
        expected = sum(ri ** (2 * j) * si ** (2 * (k - 1 - j)) for j in range(k))
        value = quantum_integer(2, 2, k)
        assert value == expected
        assert value != 0

    def test_negative_argument(self):
        ri, si = r(1, 1), s(1, 1)
        assert quantum_integer(1, 1, -1) == -(ri**-2) * si**-2

    def test_index_checked(self):
        with pytest.raises(IndexOutOfRange):
            quantum_integer(1, 2, 1)


class TestRatioAsSignedPower:
    def test_examples(self, K1):
        ri, si = r(1, 1), s(1, 1)
        assert ratio_as_signed_power(ri / si, 1) == (1, 1)
        assert ratio_as_signed_power(K1.one, 1) == (1, 0)
        assert ratio_as_signed_power(ri**2, 1) is None

    @pytest.mark.parametrize("sign", (1, -1))
    @pytest.mark.parametrize("p", range(-10, 11))
    def test_partial_inverse(self, sign, p):
        for j in (1, 2):
            x = (r(2, j) / s(2, j)) ** p * sign
            assert ratio_as_signed_power(x, j) == (sign, p)

    def test_rejects_other_parameters(self):
        assert ratio_as_signed_power(r(2, 2) / s(2, 2), 1) is None
        assert ratio_as_signed_power(2 * r(2, 1) / s(2, 1), 1) is None
        assert ratio_as_signed_power(r(2, 1) + s(2, 1), 1) is None

    def test_zero(self, K1):
        with pytest.raises(ZeroInput):
            ratio_as_signed_power(K1.zero, 1)


class TestHelpers:
    def test_field_is_cached(self):
        assert coefficient_field(3) is coefficient_field(3)

    def test_rank_must_be_positive(self):
        with pytest.raises(IndexOutOfRange):
            coefficient_field(0)

    def test_coerce(self):
        assert coerce(1, Fraction(1, 2)) * 2 == 1
        with pytest.raises(IndexOutOfRange):
            coerce(1, r(2, 1))

    def test_laurent_monomial(self):
        x = laurent_monomial(2, (1, 0, 0, -2), coeff=3)
        assert x == 3 * r(2, 1) / s(2, 2) ** 2
        assert monomial_of(x) == (Fraction(3), (1, 0, 0, -2))
        assert monomial_of(r(2, 1) + 1) is None

    def test_specialize_uniform(self):
        x = r(2, 2) ** 2 - s(2, 1) * s(2, 2)
        assert specialize_uniform(x) == r(2, 1) ** 2 - s(2, 1) ** 2

    def test_specialize_vanishing_denominator(self):
        with pytest.raises(DivisionByZero):
            specialize_uniform(1 / (r(2, 1) - r(2, 2)))

    def test_text(self):
        ri, si = r(1, 1), s(1, 1)
        assert scalar_text(ri**2 + si**2) == "r1^2 + s1^2"
        assert scalar_text(-(si**2)) == "-1*s1^2"
        assert scalar_text(3 * ri - 1) == "3*r1 - 1"
        assert scalar_text(coerce(1, -3)) == "-3"
        assert scalar_payload(ri / (ri - si)) == {"num": "r1", "den": "r1 - s1"}

    @settings(deadline=None, max_examples=60)
    @given(scalars())
    def test_text_parses_back(self, x):
        assert parse_scalar(scalar_text(x), 2) == x
