import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpweyl.algebra import (
    AlgebraElement,
    GeneratorSymbol,
    NormalMonomial,
    conjugate,
    element_payload,
    element_text,
    multiply,
    normalize,
    presentation_relations,
    verify_presentation,
    word_of,
)
from mpweyl.errors import ExpressionError, IndexOutOfRange
from mpweyl.expression import parse_element
from mpweyl.scalars import r, s
from tests.strategies import ranked_words, words


def g(kind, i, e=1):
    return GeneratorSymbol(kind, i, e)


def mono(n, **parts):
    m = NormalMonomial.unit(n)
    for name, values in parts.items():
        m = m._replace(**{name: tuple(values)})
    return m


class TestNormalize:
    def test_y_then_x(self):
        r1, s1 = r(1, 1), s(1, 1)
        d = r1**2 - s1**2
        e = normalize((g("y", 1), g("x", 1)), 1)
        assert e.terms == {
            mono(1, rho=[2]): r1**2 / d,
            mono(1, sigma=[2]): -(s1**2) / d,
        }

    def test_x_then_y(self):
        r1, s1 = r(1, 1), s(1, 1)
        d = r1**2 - s1**2
        e = normalize((g("x", 1), g("y", 1)), 1)
        assert e.terms == {mono(1, rho=[2]): 1 / d, mono(1, sigma=[2]): -1 / d}

    def test_rho_before_x_is_normal(self):
        e = normalize((g("rho", 1), g("x", 1)), 1)
        assert e.terms == {mono(1, rho=[1], x=[1]): 1}

    def test_x_past_rho(self):
        e = normalize((g("x", 1), g("rho", 1)), 1)
        assert e.terms == {mono(1, rho=[1], x=[1]): r(1, 1) ** -1}
        e = normalize((g("y", 1), g("sigma", 1, 2)), 1)
        assert e.terms == {mono(1, sigma=[2], y=[1]): s(1, 1) ** 2}

    def test_different_indices_commute(self):
        e = normalize((g("y", 1), g("x", 2)), 2)
        assert e.terms == {mono(2, x=[0, 1], y=[1, 0]): 1}

    def test_torus_inverse(self):
        assert normalize((g("sigma", 1, 3), g("sigma", 1, -3)), 1) == AlgebraElement.one(1)

    def test_rejects_bad_letters(self):
        with pytest.raises(IndexOutOfRange):
            normalize((g("x", 2),), 1)
        with pytest.raises(ExpressionError):
            normalize((g("y", 1, -1),), 1)

    @settings(deadline=None, max_examples=60)
    @given(ranked_words())
    def test_results_are_normal(self, case):
        n, word = case
        for m, _ in normalize(word, n):
            assert all(u * v == 0 for u, v in zip(m.x, m.y))

    @settings(deadline=None, max_examples=60)
    @given(ranked_words())
    def test_idempotent(self, case):
        n, word = case
        for m, _ in normalize(word, n):
            assert normalize(word_of(m), n) == AlgebraElement.monomial(m)


class TestMultiply:
    def test_unit(self):
        e = normalize((g("y", 1), g("rho", 1, -1), g("x", 1, 2)), 1)
        assert multiply(AlgebraElement.one(1), e) == e
        assert multiply(e, AlgebraElement.one(1)) == e

    def test_matches_normalize(self):
        y1, x1 = normalize((g("y", 1),), 1), normalize((g("x", 1),), 1)
        assert multiply(y1, x1) == normalize((g("y", 1), g("x", 1)), 1)

    @settings(deadline=None, max_examples=40)
    @given(st.data())
    def test_associative_and_distributive(self, data):
        n = data.draw(st.integers(1, 2))
        a, b, c = (normalize(data.draw(words(n, 4)), n) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    def test_powers(self):
        rho = AlgebraElement.generator(1, "rho", 1)
        assert rho**-2 * rho**2 == 1
        with pytest.raises(ExpressionError):
            AlgebraElement.generator(1, "x", 1) ** -1

    def test_rank_mismatch(self):
        with pytest.raises(IndexOutOfRange):
            multiply(AlgebraElement.one(1), AlgebraElement.one(2))


class TestConjugate:
    def test_rho_scales_x(self):
        x1 = AlgebraElement.generator(1, "x", 1)
        assert conjugate(1, "rho", x1) == x1.scale(r(1, 1))

    def test_sigma_scales_y(self):
        y1 = AlgebraElement.generator(1, "y", 1)
        assert conjugate(1, "sigma", y1) == y1.scale(s(1, 1) ** -1)

    def test_fixes_torus(self):
        e = normalize((g("rho", 2), g("sigma", 1)), 2)
        assert conjugate(1, "rho", e) == e

    def test_monomial_rule(self):
        e = normalize((g("rho", 1, 2), g("x", 1, 3), g("y", 2)), 2)
        assert conjugate(1, "rho", e) == e.scale(r(2, 1) ** 3)
        assert conjugate(2, "sigma", e) == e.scale(s(2, 2) ** -1)


class TestPresentation:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_all_relations_vanish(self, n):
        report = verify_presentation(n)
        assert report.ok, report.residuals
        assert report.checked == len(presentation_relations(n))

    def test_relation_groups(self):
        groups = {rel.group for rel in presentation_relations(2)}
        assert groups == {
            "torus",
            "torus-ladder",
            "ladder-commute",
            "commutator",
            "ladder-product",
            "down-up",
        }

    def test_down_up_identity_by_hand(self):
        r1, s1 = r(1, 1), s(1, 1)
        y, x = AlgebraElement.generator(1, "y", 1), AlgebraElement.generator(1, "x", 1)
        lhs = y * y * x
        rhs = (y * x * y).scale(r1**2 + s1**2) - (x * y * y).scale(r1**2 * s1**2)
        assert lhs == rhs

    def test_second_down_up_identity_by_hand(self):
        r1, s1 = r(1, 1), s(1, 1)
        y, x = AlgebraElement.generator(1, "y", 1), AlgebraElement.generator(1, "x", 1)
        rhs = (x * y * x).scale(r1**2 + s1**2) - (x * x * y).scale(r1**2 * s1**2)
        assert y * x * x == rhs


class TestText:
    def test_canonical_text(self):
        e = normalize((g("y", 1), g("x", 1)), 1)
        assert element_text(e) == (
            "(-1*s1^2)/(r1^2 - s1^2) * sigma1^2 + (r1^2)/(r1^2 - s1^2) * rho1^2"
        )
        assert element_text(AlgebraElement.zero(1)) == "0"

    def test_payload(self):
        e = normalize((g("rho", 1), g("x", 1)), 1)
        assert element_payload(e) == {
            "terms": [
                {
                    "monomial": {"rho": [1], "sigma": [0], "x": [1], "y": [0]},
                    "coeff": {"num": "1", "den": "1"},
                }
            ]
        }
        assert element_payload(normalize((g("x", 1), g("rho", 1)), 1))["terms"][0]["coeff"] == {
            "num": "1",
            "den": "r1",
        }

    @settings(deadline=None, max_examples=60)
    @given(ranked_words(max_length=5))
    def test_text_parses_back(self, case):
        n, word = case
        e = normalize(word, n)
        assert parse_element(element_text(e), n) == e
