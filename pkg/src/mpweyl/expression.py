"""Text expressions over A_{r,s}(n) and its coefficient field.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' signed_int]
    atom   := int | identifier | '(' expr ')' | '-' atom

Identifiers are parameters ``r1 .. rn``, ``s1 .. sn``, algebra generators
``rho1, sigma1, x1, y1, ...`` and quantum group generators ``e1, f1, w1, wp1``
(indices 1..n-1), which evaluate to their images in the algebra. Unary minus
binds tighter than ``^``, so ``-r1^2`` is ``(-r1)^2``; canonical output writes
negative leading terms as ``-1*...`` for that reason.
"""

import re
from dataclasses import dataclass, field
from functools import reduce

import pyparsing as pp

from .algebra import AlgebraElement
from .errors import DivisionByZero, ExpressionError, ExpressionSyntaxError, UnknownSymbol
from .scalars import RationalScalar, coerce, r, s
from .uqrs import UGenerator, u_image

pp.ParserElement.enable_packrat()

PARAMETERS = ("r", "s")
GENERATORS = ("rho", "sigma", "x", "y")
U_GENERATORS = {"e": "e", "f": "f", "w": "omega", "wp": "omega_prime"}

_IDENT = re.compile(r"([A-Za-z_]+)(\d+)$")


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Param:
    name: str
    index: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Gen:
    name: str
    index: int
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expression"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expression"
    right: "Expression"
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Pow:
    base: "Expression"
    exponent: int
    pos: int = field(default=0, compare=False)


Expression = Num | Param | Gen | Neg | BinOp | Pow


class _Symbol:
    """Raw identifier; resolved into Param or Gen after parsing."""

    __slots__ = ("name", "index", "pos")

    def __init__(self, name: str, index: int, pos: int):
        self.name, self.index, self.pos = name, index, pos


def _identifier(s: str, loc: int, toks: pp.ParseResults):
    m = _IDENT.match(toks[0])
    if m is None:
        return _Symbol(toks[0], 0, loc)
    return _Symbol(m.group(1), int(m.group(2)), loc)


def _fold(s: str, loc: int, toks: pp.ParseResults):
    items = toks[0]
    return reduce(
        lambda acc, pair: BinOp(pair[0], acc, pair[1], acc.pos),
        zip(items[1::2], items[2::2]),
        items[0],
    )


def _power(s: str, loc: int, toks: pp.ParseResults):
    items = toks[0]
    if len(items) == 1:
        return items[0]
    return Pow(items[0], int(items[1]), items[0].pos)


def _grammar() -> pp.ParserElement:
    expr = pp.Forward()
    integer = pp.Regex(r"\d+")
    signed = pp.Regex(r"-?\d+")
    exponent = signed | pp.Suppress("(") + signed + pp.Suppress(")")
    number = integer.copy().set_parse_action(lambda s, loc, t: Num(int(t[0]), loc))
    identifier = pp.Regex(r"[A-Za-z_][A-Za-z_0-9]*").set_parse_action(_identifier)
    atom = pp.Forward()
    negated = (pp.Suppress("-") + atom).set_parse_action(lambda s, loc, t: Neg(t[0], loc))
    atom <<= number | identifier | pp.Suppress("(") + expr + pp.Suppress(")") | negated
    factor = pp.Group(atom + pp.Optional(pp.Suppress("^") + exponent)).set_parse_action(_power)
    term = pp.Group(factor + pp.ZeroOrMore(pp.one_of("* /") + factor)).set_parse_action(_fold)
    expr <<= pp.Group(term + pp.ZeroOrMore(pp.one_of("+ -") + term)).set_parse_action(_fold)
    return expr


_EXPR = _grammar()


def parse(text: str, n: int) -> Expression:
    """Parse text into an expression tree whose symbols are valid for rank n."""
    try:
        raw = _EXPR.parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        raise ExpressionSyntaxError(
            f"cannot parse expression: {exc.msg}", line=exc.lineno, column=exc.col
        ) from None
    return _resolve(raw, text, n)


def _unknown(message: str, text: str, pos: int) -> UnknownSymbol:
    return UnknownSymbol(message, line=pp.lineno(pos, text), column=pp.col(pos, text))


def _resolve(node, text: str, n: int) -> Expression:
    match node:
        case _Symbol(name=name, index=index, pos=pos):
            label = f"{name}{index}" if index else name
            if name in PARAMETERS or name in GENERATORS:
                if not 1 <= index <= n:
                    raise _unknown(f"{label} is not defined for n = {n}", text, pos)
                return (Param if name in PARAMETERS else Gen)(name, index, pos)
            if name in U_GENERATORS:
                if not 1 <= index < n:
                    raise _unknown(f"{label} needs an index in 1..{n - 1}", text, pos)
                return Gen(name, index, pos)
            raise _unknown(f"unknown symbol {label!r}", text, pos)
        case Neg(operand=operand, pos=pos):
            return Neg(_resolve(operand, text, n), pos)
        case BinOp(op=op, left=left, right=right, pos=pos):
            return BinOp(op, _resolve(left, text, n), _resolve(right, text, n), pos)
        case Pow(base=base, exponent=e, pos=pos):
            return Pow(_resolve(base, text, n), e, pos)
    return node


_LEVEL = {"+": 1, "-": 1, "*": 2, "/": 2}


def _level(node: Expression) -> int:
    if isinstance(node, BinOp):
        return _LEVEL[node.op]
    if isinstance(node, Pow):
        return 3
    return 4


def format_expression(node: Expression) -> str:
    """Text that parses back to an equal tree."""
    match node:
        case Num(value=value):
            return str(value)
        case Param(name=name, index=index) | Gen(name=name, index=index):
            return f"{name}{index}"
        case Neg(operand=operand):
            inner = format_expression(operand)
            return f"-{inner}" if _level(operand) == 4 else f"-({inner})"
        case Pow(base=base, exponent=e):
            inner = format_expression(base)
            if _level(base) < 4 or isinstance(base, Neg):
                inner = f"({inner})"
            return f"{inner}^{e}"
        case BinOp(op=op, left=left, right=right):
            lhs = format_expression(left)
            rhs = format_expression(right)
            if _level(left) < _LEVEL[op]:
                lhs = f"({lhs})"
            if _level(right) <= _LEVEL[op]:
                rhs = f"({rhs})"
            sep = f" {op} " if _LEVEL[op] == 1 else op
            return f"{lhs}{sep}{rhs}"
    raise TypeError(f"not an expression node: {node!r}")


def is_scalar(node: Expression) -> bool:
    match node:
        case Num() | Param():
            return True
        case Gen():
            return False
        case Neg(operand=operand) | Pow(base=operand):
            return is_scalar(operand)
        case BinOp(left=left, right=right):
            return is_scalar(left) and is_scalar(right)
    raise TypeError(f"not an expression node: {node!r}")


def _error(message: str, node: Expression, text: str | None) -> ExpressionError:
    if text is None:
        return ExpressionError(message)
    return ExpressionError(message, line=pp.lineno(node.pos, text), column=pp.col(node.pos, text))


def _binary(op: str, a, b, right: Expression):
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if not b:
        raise DivisionByZero(f"division by zero: {format_expression(right)}")
    return a / b


def evaluate_scalar(node: Expression, n: int, text: str | None = None) -> RationalScalar:
    """Value of a generator-free expression in Q(r1..rn, s1..sn)."""
    match node:
        case Num(value=value):
            return coerce(n, value)
        case Param(name="r", index=i):
            return r(n, i)
        case Param(name="s", index=i):
            return s(n, i)
        case Neg(operand=operand):
            return -evaluate_scalar(operand, n, text)
        case Pow(base=base, exponent=e):
            value = evaluate_scalar(base, n, text)
            if e < 0 and not value:
                raise DivisionByZero(f"{format_expression(base)} is zero and cannot be inverted")
            return value**e
        case BinOp(op=op, left=left, right=right):
            a = evaluate_scalar(left, n, text)
            b = evaluate_scalar(right, n, text)
            return _binary(op, a, b, right)
    raise _error(f"{format_expression(node)} is not a scalar", node, text)


def evaluate(node: Expression, n: int, text: str | None = None) -> AlgebraElement:
    """Value of an expression as an element of A_{r,s}(n), in normal form."""
    if is_scalar(node):
        return AlgebraElement.scalar(n, evaluate_scalar(node, n, text))
    match node:
        case Gen(name=name, index=i) if name in GENERATORS:
            return AlgebraElement.generator(n, name, i)
        case Gen(name=name, index=i):
            return u_image(UGenerator(U_GENERATORS[name], i), n)
        case Neg(operand=operand):
            return -evaluate(operand, n, text)
        case Pow(base=base, exponent=e):
            value = evaluate(base, n, text)
            if e >= 0:
                return value**e
            if len(value) != 1 or not next(iter(value))[0].is_torus():
                raise _error(
                    f"{format_expression(base)} has no inverse in the algebra", node, text
                )
            return value**e
        case BinOp(op="/", right=right):
            raise _error(
                f"division by {format_expression(right)}: '/' is only allowed between scalars",
                node,
                text,
            )
        case BinOp(op=op, left=left, right=right):
            a = evaluate(left, n, text)
            b = evaluate(right, n, text)
            return _binary(op, a, b, right)
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(text: str, n: int) -> AlgebraElement:
    return evaluate(parse(text, n), n, text)


def parse_scalar(text: str, n: int) -> RationalScalar:
    node = parse(text, n)
    if not is_scalar(node):
        raise _error(f"{text!r} is not a scalar expression", node, text)
    return evaluate_scalar(node, n, text)


def parse_scalar_list(text: str, n: int) -> list[RationalScalar]:
    """Comma-separated scalar expressions, e.g. ``1, r1/s1``."""
    return [parse_scalar(part, n) for part in text.split(",")]
