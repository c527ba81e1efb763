"""Exact arithmetic in the coefficient field Q(r_1..r_n, s_1..s_n).

Scalars are elements of a sympy fraction field whose generators are ordered
r1..rn, s1..sn, so the exponent vector of a Laurent monomial has the r_i
exponents in positions 1..n and the s_i exponents in positions n+1..2n.
sympy keeps every element as a cancelled fraction of integer polynomials
with a sign-normalised denominator; that fraction is the canonical form.
Printing orders terms by total degree, then lexicographically on the
exponent vector (grlex), highest first.
"""

import operator
from fractions import Fraction
from functools import lru_cache
from typing import Annotated, Literal

from pydantic import PlainSerializer
from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, FracField, field
from sympy.polys.orderings import grlex

from .errors import DivisionByZero, IndexOutOfRange, ZeroInput

RationalScalar = FracElement

FieldOp = Literal["add", "sub", "mul", "div", "neg", "inv", "eq"]


@lru_cache(maxsize=None)
def coefficient_field(n: int) -> FracField:
    """Return the fraction field Q(r1..rn, s1..sn), one instance per n."""
    if n < 1:
        raise IndexOutOfRange(f"rank n must be >= 1, got {n}")
    names = [f"r{i}" for i in range(1, n + 1)] + [f"s{i}" for i in range(1, n + 1)]
    K, *_ = field(",".join(names), QQ)
    return K


def rank_of(x: RationalScalar) -> int:
    """Rank n of the field a scalar lives in."""
    return x.field.ngens // 2


def r(n: int, i: int) -> RationalScalar:
    _check_index(n, i)
    return coefficient_field(n).gens[i - 1]


def s(n: int, i: int) -> RationalScalar:
    _check_index(n, i)
    return coefficient_field(n).gens[n + i - 1]


def one(n: int) -> RationalScalar:
    return coefficient_field(n).one


def zero(n: int) -> RationalScalar:
    return coefficient_field(n).zero


def coerce(n: int, value: "RationalScalar | int | Fraction") -> RationalScalar:
    """Bring an integer, fraction or scalar into the field of rank n."""
    K = coefficient_field(n)
    if isinstance(value, FracElement):
        if value.field != K:
            raise IndexOutOfRange(
                f"scalar belongs to rank {rank_of(value)}, expected rank {n}"
            )
        return value
    if isinstance(value, Fraction):
        return K(value.numerator) / K(value.denominator)
    return K(value)


def laurent_monomial(n: int, exponents: tuple[int, ...], coeff: int = 1) -> RationalScalar:
    """Build coeff * prod(gen_k ** exponents[k]) over the 2n generators."""
    if len(exponents) != 2 * n:
        raise IndexOutOfRange(f"expected {2 * n} exponents, got {len(exponents)}")
    K = coefficient_field(n)
    value = K(coeff)
    for gen, e in zip(K.gens, exponents):
        if e:
            value *= gen**e
    return value


_BINARY = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def field_op(
    op: FieldOp, a: RationalScalar, b: RationalScalar | None = None
) -> RationalScalar | bool:
    """Apply one field operation; results are always in canonical form."""
    if op == "neg":
        return -a
    if op == "inv":
        if not a:
            raise DivisionByZero("cannot invert zero")
        return a**-1
    if b is None:
        raise TypeError(f"operation {op!r} needs two operands")
    if op == "eq":
        return not (a - b)
    if op == "div" and not b:
        raise DivisionByZero("division by zero")
    try:
        return _BINARY[op](a, b)
    except KeyError:
        raise TypeError(f"unknown field operation {op!r}") from None


def quantum_integer(n: int, i: int, k: int) -> RationalScalar:
    """[k] = (r_i^{2k} - s_i^{2k}) / (r_i^2 - s_i^2), evaluated as written for any k."""
    ri, si = r(n, i), s(n, i)
    return (ri ** (2 * k) - si ** (2 * k)) / (ri**2 - si**2)


def monomial_of(x: RationalScalar) -> tuple[Fraction, tuple[int, ...]] | None:
    """Split x into (coefficient, Laurent exponent vector) if it is a single term."""
    if not x or len(x.numer) != 1 or len(x.denom) != 1:
        return None
    (num_monom, num_coeff), = x.numer.terms()
    (den_monom, den_coeff), = x.denom.terms()
    coeff = Fraction(int(num_coeff.numerator), int(num_coeff.denominator)) / Fraction(
        int(den_coeff.numerator), int(den_coeff.denominator)
    )
    exponents = tuple(a - b for a, b in zip(num_monom, den_monom))
    return coeff, exponents


def ratio_as_signed_power(x: RationalScalar, j: int) -> tuple[int, int] | None:
    """Solve x = sign * (r_j / s_j)^p exactly; None when no (sign, p) exists."""
    if not x:
        raise ZeroInput("ratio_as_signed_power needs a nonzero scalar")
    n = rank_of(x)
    _check_index(n, j)
    split = monomial_of(x)
    if split is None:
        return None
    coeff, exponents = split
    if coeff not in (1, -1):
        return None
    p = exponents[j - 1]
    expected = [0] * (2 * n)
    expected[j - 1] = p
    expected[n + j - 1] = -p
    if list(exponents) != expected:
        return None
    return int(coeff), p


def specialize_uniform(x: RationalScalar) -> RationalScalar:
    """Substitute r_i -> r_1 and s_i -> s_1 for every i."""
    n = rank_of(x)
    if n == 1:
        return x
    ring = x.field.ring
    gens = ring.gens
    replacements = [(gens[i], gens[0]) for i in range(1, n)]
    replacements += [(gens[n + i], gens[n]) for i in range(1, n)]
    numer = x.numer.compose(list(replacements))
    denom = x.denom.compose(list(replacements))
    if not denom:
        raise DivisionByZero("denominator vanishes under the uniform specialization")
    return x.field.new(numer, denom)


def poly_text(p) -> str:
    """Text of a polynomial in the expression grammar, e.g. ``r1^2 - 3*s1``."""
    if not p:
        return "0"
    symbols = [str(sym) for sym in p.ring.symbols]
    pieces: list[str] = []
    for monom, coeff in p.terms(order=grlex):
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(symbols, monom)
            if e
        ]
        mono = "*".join(factors)
        magnitude = abs(Fraction(int(coeff.numerator), int(coeff.denominator)))
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        negative = coeff < 0
        if not pieces:
            if negative:
                body = f"-{body}" if body[0].isdigit() else f"-1*{body}"
            pieces.append(body)
        else:
            pieces.append(f"{'-' if negative else '+'} {body}")
    return " ".join(pieces)


def scalar_text(x: RationalScalar) -> str:
    """Canonical text of a scalar; parses back to the same scalar."""
    num = poly_text(x.numer)
    if x.denom == 1:
        return num
    return f"({num})/({poly_text(x.denom)})"


def scalar_payload(x: RationalScalar) -> dict[str, str]:
    return {"num": poly_text(x.numer), "den": poly_text(x.denom)}


Scalar = Annotated[RationalScalar, PlainSerializer(scalar_payload)]


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"parameter index {i} outside 1..{n}")
