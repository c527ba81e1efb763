import pytest
from hypothesis import given, settings

from mpweyl.algebra import AlgebraElement
from mpweyl.errors import DivisionByZero, ExpressionError, ExpressionSyntaxError, UnknownSymbol
from mpweyl.expression import (
    BinOp,
    Gen,
    Neg,
    Num,
    Param,
    Pow,
    format_expression,
    is_scalar,
    parse,
    parse_element,
    parse_scalar,
    parse_scalar_list,
)
from mpweyl.scalars import r, s
from mpweyl.uqrs import UGenerator, u_image
from tests.strategies import expression_trees

CORPUS = [
    "1",
    "0",
    "42",
    "r1",
    "s2",
    "rho1",
    "sigma3",
    "x2",
    "y3",
    "e1",
    "f2",
    "w1",
    "wp2",
    "-x1",
    "--x1",
    "-r1^2",
    "-(r1^2)",
    "(-r1)^2",
    "r1^-1",
    "r1^(-1)",
    "rho2^-3",
    "(r1^2)^3",
    "y1*x1",
    "y1 * x1",
    "x1*y1 - y1*x1",
    "r1^2 - s1^2",
    "(r1^2 - s1^2)",
    "r1 - (s1 - r2)",
    "r1 - s1 - r2",
    "(r1 - s1) - r2",
    "r1/s1/r2",
    "r1/(s1/r2)",
    "r1/(s1*r2)",
    "r1*s1/r2",
    "(r1 + s1)*(r1 - s1)",
    "3*r1 - 1",
    "-1*s1^2",
    "(-1*s1^2)/(r1^2 - s1^2)",
    "(r1^2)/(r1^2 - s1^2) * rho1^2",
    "x1 - -y1",
    "x1*-y1",
    "x1 + -(y1*x1)",
    "(x1 + y1)^2",
    "(x1*y1)^2",
    "rho1*sigma1*x1*y1",
    "rho1^-1*sigma1^2*x2^3*y3",
    "e1*f1 - f1*e1",
    "w1^2 - wp1^2",
    "(e1 + f2)*(w2 - 1)",
    "r3^2*s3^-2 + 7",
    "((x1))",
    "-(x1 - y1)*(r1 + 2)",
    "2^3*r1",
    "  y2*x2   +  3 ",
]


class TestParse:
    def test_product(self):
        assert parse("y1*x1", 1) == BinOp("*", Gen("y", 1), Gen("x", 1))

    def test_parenthesised_difference(self):
        assert parse("(r1^2 - s1^2)", 1) == BinOp("-", Pow(Param("r", 1), 2), Pow(Param("s", 1), 2))

    def test_unary_minus_binds_tighter_than_power(self):
        assert parse("-r1^2", 1) == Pow(Neg(Param("r", 1)), 2)
        assert parse("-(r1^2)", 1) == Neg(Pow(Param("r", 1), 2))

    def test_left_associative(self):
        a, b, c = Param("r", 1), Param("s", 1), Param("r", 2)
        assert parse("r1 - s1 - r2", 2) == BinOp("-", BinOp("-", a, b), c)
        assert parse("r1/s1/r2", 2) == BinOp("/", BinOp("/", a, b), c)

    def test_signed_exponent(self):
        assert parse("rho1^-2", 1) == parse("rho1^(-2)", 1) == Pow(Gen("rho", 1), -2)

    def test_syntax_error_position(self):
        with pytest.raises(ExpressionSyntaxError) as info:
            parse("y1*", 1)
        assert info.value.line == 1
        assert info.value.payload()["code"] == "syntax"

    @pytest.mark.parametrize("text", ["", "x1 +", "(x1", "x1)", "x1^", "x1^y1", "x1 ** 2"])
    def test_malformed(self, text):
        with pytest.raises(ExpressionSyntaxError):
            parse(text, 2)

    def test_unknown_index(self):
        with pytest.raises(UnknownSymbol) as info:
            parse("y1*x2", 1)
        assert (info.value.line, info.value.column) == (1, 4)

    @pytest.mark.parametrize("text", ["z1", "rho", "x0", "r4", "e1"])
    def test_unknown_symbols(self, text):
        n = 1 if text == "e1" else 3
        with pytest.raises(UnknownSymbol):
            parse(text, n)

    def test_quantum_generator_indices(self):
        assert parse("wp2", 3) == Gen("wp", 2)
        with pytest.raises(UnknownSymbol):
            parse("e3", 3)


class TestFormat:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("y1 * x1", "y1*x1"),
            ("(r1^2 - s1^2)", "r1^2 - s1^2"),
            ("r1 - (s1 - r1)", "r1 - (s1 - r1)"),
            ("(r1 - s1) - r1", "r1 - s1 - r1"),
            ("-r1^2", "(-r1)^2"),
            ("-(r1^2)", "-(r1^2)"),
            ("r1^(-1)", "r1^-1"),
            ("(x1*y1)^2", "(x1*y1)^2"),
            ("x1 - -y1", "x1 - -y1"),
        ],
    )
    def test_canonical_text(self, text, expected):
        assert format_expression(parse(text, 1)) == expected

    @pytest.mark.parametrize("text", CORPUS)
    def test_corpus_round_trip(self, text):
        tree = parse(text, 3)
        assert parse(format_expression(tree), 3) == tree

    def test_corpus_size(self):
        assert len(CORPUS) >= 50

    @settings(deadline=None)
    @given(expression_trees(3))
    def test_round_trip(self, tree):
        assert parse(format_expression(tree), 3) == tree


class TestEvaluate:
    def test_down_up_relation_vanishes(self):
        text = "y1*x1 - (r1^2/(r1^2 - s1^2))*rho1^2 + (s1^2/(r1^2 - s1^2))*sigma1^2"
        assert parse_element(text, 1) == AlgebraElement.zero(1)

    def test_exchange_relation_vanishes(self):
        assert parse_element("y1*x1 - r1^2*x1*y1 - sigma1^2", 1) == AlgebraElement.zero(1)
        assert parse_element("y2*x2 - r2^2*x2*y2 - sigma2^2", 2) == AlgebraElement.zero(2)

    def test_torus_inverse(self):
        assert parse_element("rho1^-1*rho1", 1) == AlgebraElement.one(1)
        assert parse_element("sigma2^-2*sigma2^2", 2) == AlgebraElement.one(2)

    def test_quantum_generators_use_their_images(self):
        assert parse_element("e1", 2) == u_image(UGenerator("e", 1), 2)
        assert parse_element("wp1^2", 2) == u_image(UGenerator("omega_prime", 1), 2) ** 2

    def test_division_between_generators(self):
        with pytest.raises(ExpressionError) as info:
            parse_element("x1/y1", 1)
        assert info.value.column == 1

    def test_ladder_has_no_inverse(self):
        with pytest.raises(ExpressionError):
            parse_element("x1^-1", 1)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            parse_element("r1/(r1 - r1)", 1)
        with pytest.raises(DivisionByZero):
            parse_scalar("(s1 - s1)^-1", 1)

    def test_scalars(self):
        assert parse_scalar("r1^2 - s1^2", 1) == r(1, 1) ** 2 - s(1, 1) ** 2
        assert parse_scalar("-r1^2", 1) == r(1, 1) ** 2
        assert parse_scalar("r2/s1", 2) == r(2, 2) / s(2, 1)

    def test_scalar_required(self):
        with pytest.raises(ExpressionError):
            parse_scalar("r1*x1", 1)

    def test_scalar_list(self):
        assert parse_scalar_list("1, r1/s1", 1) == [1, r(1, 1) / s(1, 1)]

    def test_is_scalar(self):
        assert is_scalar(parse("(r1 + 2)^-1", 1))
        assert not is_scalar(parse("r1*rho1", 1))
        assert is_scalar(Neg(Num(3)))
