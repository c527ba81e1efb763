"""Normal forms and arithmetic in the multiparameter Weyl algebra A_{r,s}(n).

Every element is written in the basis

    rho_1^a1 sigma_1^b1 ... rho_n^an sigma_n^bn  x/y_1^{u1|v1} ... x/y_n^{un|vn}

with at most one of x_i, y_i present per index. Right multiplication by a single
generator letter only touches the factors of its own index, so normalization is
a fold of cached per-index rules over the letters of a word.
"""

import random
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, NamedTuple

from .errors import ExpressionError, IndexOutOfRange
from .reports import CheckReport
from .scalars import (
    RationalScalar,
    coefficient_field,
    coerce,
    r,
    s,
    scalar_payload,
    scalar_text,
)

Kind = Literal["rho", "sigma", "x", "y"]
TORUS: tuple[str, ...] = ("rho", "sigma")
LADDER: tuple[str, ...] = ("x", "y")


class GeneratorSymbol(NamedTuple):
    """One letter of a word: rho_i^e, sigma_i^e (any e) or x_i^e, y_i^e (e >= 1)."""

    kind: str
    index: int
    exponent: int = 1

    def text(self) -> str:
        name = f"{self.kind}{self.index}"
        return name if self.exponent == 1 else f"{name}^{self.exponent}"


Word = tuple[GeneratorSymbol, ...]


def check_letter(n: int, letter: GeneratorSymbol) -> None:
    if letter.kind not in TORUS + LADDER:
        raise ExpressionError(f"unknown generator kind {letter.kind!r}")
    if not 1 <= letter.index <= n:
        raise IndexOutOfRange(f"generator {letter.kind}{letter.index} outside 1..{n}")
    if letter.kind in LADDER and letter.exponent < 1:
        raise ExpressionError(
            f"{letter.kind}{letter.index} cannot carry exponent {letter.exponent}"
        )


def word_text(word: Word) -> str:
    return "*".join(letter.text() for letter in word) if word else "1"


class NormalMonomial(NamedTuple):
    """Exponents of rho_i, sigma_i, x_i, y_i per index, with x_i y_i never both present."""

    rho: tuple[int, ...]
    sigma: tuple[int, ...]
    x: tuple[int, ...]
    y: tuple[int, ...]

    @classmethod
    def unit(cls, n: int) -> "NormalMonomial":
        zeros = (0,) * n
        return cls(zeros, zeros, zeros, zeros)

    @property
    def n(self) -> int:
        return len(self.rho)

    def local(self, i: int) -> tuple[int, int, int, int]:
        return self.rho[i - 1], self.sigma[i - 1], self.x[i - 1], self.y[i - 1]

    def with_local(self, i: int, local: tuple[int, int, int, int]) -> "NormalMonomial":
        k = i - 1
        a, b, u, v = local
        return NormalMonomial(
            self.rho[:k] + (a,) + self.rho[k + 1 :],
            self.sigma[:k] + (b,) + self.sigma[k + 1 :],
            self.x[:k] + (u,) + self.x[k + 1 :],
            self.y[:k] + (v,) + self.y[k + 1 :],
        )

    def sort_key(self) -> tuple[int, ...]:
        key: list[int] = []
        for i in range(self.n):
            key += [self.x[i], self.y[i], self.rho[i], self.sigma[i]]
        return tuple(key)

    def is_torus(self) -> bool:
        return not any(self.x) and not any(self.y)

    def word(self) -> Word:
        return word_of(self)

    def text(self) -> str:
        return word_text(self.word())

    def payload(self) -> dict[str, list[int]]:
        return {
            "rho": list(self.rho),
            "sigma": list(self.sigma),
            "x": list(self.x),
            "y": list(self.y),
        }


def word_of(m: NormalMonomial) -> Word:
    """Letters of a monomial in basis order: torus part, then x/y by index."""
    letters: list[GeneratorSymbol] = []
    for i in range(1, m.n + 1):
        a, b, _, _ = m.local(i)
        if a:
            letters.append(GeneratorSymbol("rho", i, a))
        if b:
            letters.append(GeneratorSymbol("sigma", i, b))
    for i in range(1, m.n + 1):
        _, _, u, v = m.local(i)
        if u:
            letters.append(GeneratorSymbol("x", i, u))
        if v:
            letters.append(GeneratorSymbol("y", i, v))
    return tuple(letters)


ScalarLike = RationalScalar | int


class AlgebraElement:
    """A finite linear combination of normal monomials with nonzero coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[NormalMonomial, RationalScalar] | None = None):
        self.n = n
        self.terms: dict[NormalMonomial, RationalScalar] = {
            m: c for m, c in (terms or {}).items() if c
        }

    @classmethod
    def zero(cls, n: int) -> "AlgebraElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "AlgebraElement":
        return cls.scalar(n, 1)

    @classmethod
    def scalar(cls, n: int, c: ScalarLike) -> "AlgebraElement":
        return cls(n, {NormalMonomial.unit(n): coerce(n, c)})

    @classmethod
    def monomial(cls, m: NormalMonomial, coeff: ScalarLike = 1) -> "AlgebraElement":
        return cls(m.n, {m: coerce(m.n, coeff)})

    @classmethod
    def generator(cls, n: int, kind: str, i: int, exponent: int = 1) -> "AlgebraElement":
        return normalize((GeneratorSymbol(kind, i, exponent),), n)

    def __iter__(self) -> Iterator[tuple[NormalMonomial, RationalScalar]]:
        for m in sorted(self.terms, key=NormalMonomial.sort_key):
            yield m, self.terms[m]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = AlgebraElement.scalar(self.n, other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def coefficient(self, m: NormalMonomial) -> RationalScalar:
        return self.terms.get(m, coefficient_field(self.n).zero)

    def map_coefficients(self, f: Callable[[RationalScalar], RationalScalar]) -> "AlgebraElement":
        out: dict[NormalMonomial, RationalScalar] = {}
        for m, c in self.terms.items():
            out[m] = f(c)
        return AlgebraElement(self.n, out)

    def _check_rank(self, other: "AlgebraElement") -> None:
        if other.n != self.n:
            raise IndexOutOfRange(f"cannot combine rank {self.n} and rank {other.n} elements")

    def __add__(self, other: "AlgebraElement | ScalarLike") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(self.n, other)
        self._check_rank(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            accumulate(out, m, c)
        return AlgebraElement(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement | ScalarLike") -> "AlgebraElement":
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(self.n, other)
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "AlgebraElement":
        return AlgebraElement.scalar(self.n, other) - self

    def scale(self, c: ScalarLike) -> "AlgebraElement":
        c = coerce(self.n, c)
        return AlgebraElement(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "AlgebraElement | ScalarLike") -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> "AlgebraElement":
        return self.scale(other)

    def __pow__(self, k: int) -> "AlgebraElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = AlgebraElement.one(self.n)
        for _ in range(k):
            result = multiply(result, self)
        return result

    def inverse(self) -> "AlgebraElement":
        """Inverse of a single torus monomial; nothing else is a unit here."""
        if len(self.terms) != 1:
            raise ExpressionError("only single torus monomials can be inverted")
        (m, c), = self.terms.items()
        if not m.is_torus():
            raise ExpressionError(f"{m.text()} has no inverse in the algebra")
        inv = NormalMonomial(
            tuple(-a for a in m.rho), tuple(-b for b in m.sigma), m.x, m.y
        )
        return AlgebraElement(self.n, {inv: c**-1})

    def text(self) -> str:
        return element_text(self)

    def payload(self) -> dict:
        return element_payload(self)

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {element_text(self)})"


def accumulate(out: dict, key, c) -> None:
    total = out.get(key)
    total = c if total is None else total + c
    if total:
        out[key] = total
    else:
        out.pop(key, None)


Local = tuple[int, int, int, int]


@lru_cache(maxsize=1 << 16)
def _local_product(n: int, i: int, local: Local, kind: str, e: int) -> tuple[tuple[Local, RationalScalar], ...]:
    """Normal form of (rho_i^a sigma_i^b x_i^u y_i^v) * letter, restricted to index i."""
    a, b, u, v = local
    ri, si = r(n, i), s(n, i)
    if kind == "rho":
        return (((a + e, b, u, v), ri ** ((v - u) * e)),)
    if kind == "sigma":
        return (((a, b + e, u, v), si ** ((v - u) * e)),)
    if e > 1:
        out: dict[Local, RationalScalar] = {}
        for mid, c in _local_product(n, i, local, kind, e - 1):
            for end, d in _local_product(n, i, mid, kind, 1):
                accumulate(out, end, c * d)
        return tuple(out.items())
    denom = ri**2 - si**2
    if kind == "x":
        if v == 0:
            return (((a, b, u + 1, 0), coefficient_field(n).one),)
        # y^v x = y^(v-1) t
        rest = (a, b, 0, v - 1)
        parts = [(rest, "rho", ri**2 / denom), (rest, "sigma", -(si**2) / denom)]
    else:
        if u == 0:
            return (((a, b, 0, v + 1), coefficient_field(n).one),)
        # x^u y = x^(u-1) (rho^2 - sigma^2)/(r^2 - s^2)
        rest = (a, b, u - 1, 0)
        parts = [(rest, "rho", denom**-1), (rest, "sigma", -(denom**-1))]
    out = {}
    for base, torus, c in parts:
        for end, d in _local_product(n, i, base, torus, 2):
            accumulate(out, end, c * d)
    return tuple(out.items())


def multiply_letter(e: AlgebraElement, letter: GeneratorSymbol) -> AlgebraElement:
    """Right-multiply an element by one generator letter."""
    check_letter(e.n, letter)
    if letter.exponent == 0:
        return e
    out: dict[NormalMonomial, RationalScalar] = {}
    for m, c in e.terms.items():
        for local, d in _local_product(e.n, letter.index, m.local(letter.index), letter.kind, letter.exponent):
            accumulate(out, m.with_local(letter.index, local), c * d)
    return AlgebraElement(e.n, out)


def normalize(word: Sequence[GeneratorSymbol], n: int) -> AlgebraElement:
    """Unique normal form of a word in the generators."""
    result = AlgebraElement.one(n)
    for letter in word:
        result = multiply_letter(result, letter)
    return result


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    if a.n != b.n:
        raise IndexOutOfRange(f"cannot multiply rank {a.n} by rank {b.n}")
    out: dict[NormalMonomial, RationalScalar] = {}
    for mb, cb in b.terms.items():
        partial = a
        for letter in word_of(mb):
            partial = multiply_letter(partial, letter)
        for m, c in partial.terms.items():
            accumulate(out, m, c * cb)
    return AlgebraElement(a.n, out)


def conjugate(i: int, kind: Literal["rho", "sigma"], e: AlgebraElement) -> AlgebraElement:
    """g e g^{-1} for g = rho_i or sigma_i."""
    if kind not in TORUS:
        raise ExpressionError(f"can only conjugate by rho or sigma, got {kind!r}")
    g = AlgebraElement.generator(e.n, kind, i)
    return multiply(multiply(g, e), g.inverse())


def random_word(n: int, length: int, rng: random.Random) -> Word:
    """A random word of the given length; torus exponents in -2..2, x/y in 1..2."""
    letters = []
    for _ in range(length):
        kind = rng.choice(TORUS + LADDER)
        i = rng.randint(1, n)
        if kind in TORUS:
            e = rng.choice((-2, -1, 1, 2))
        else:
            e = rng.choice((1, 1, 2))
        letters.append(GeneratorSymbol(kind, i, e))
    return tuple(letters)


def element_text(e: AlgebraElement) -> str:
    """Canonical text; parses back to the same element."""
    if not e:
        return "0"
    pieces = []
    for m, c in e:
        factors = [letter.text() for letter in word_of(m)]
        if c != 1 or not factors:
            factors.insert(0, _coeff_factor(c))
        pieces.append(" * ".join(factors))
    return " + ".join(pieces)


def _coeff_factor(c: RationalScalar) -> str:
    text = scalar_text(c)
    if c.denom == 1 and len(c.numer) > 1:
        return f"({text})"
    return text


def element_payload(e: AlgebraElement) -> dict:
    return {
        "terms": [
            {"monomial": m.payload(), "coeff": scalar_payload(c)} for m, c in e
        ]
    }


Side = list[tuple[RationalScalar, Word]]


@dataclass(frozen=True)
class Relation:
    """lhs = rhs with each side a combination of words."""

    group: str
    lhs: Side
    rhs: Side

    @property
    def name(self) -> str:
        return f"{_side_text(self.lhs)} = {_side_text(self.rhs)}"


def _side_text(side: Side) -> str:
    if not side:
        return "0"
    parts = []
    for c, word in side:
        if c == 1:
            parts.append(word_text(word))
        elif not word:
            parts.append(_coeff_factor(c))
        else:
            parts.append(f"{_coeff_factor(c)}*{word_text(word)}")
    return " + ".join(parts)


def evaluate_side(side: Side, n: int) -> AlgebraElement:
    total = AlgebraElement.zero(n)
    for c, word in side:
        total = total + normalize(word, n).scale(c)
    return total


def _g(kind: str, i: int, e: int = 1) -> GeneratorSymbol:
    return GeneratorSymbol(kind, i, e)


def presentation_relations(n: int) -> list[Relation]:
    """Defining relations of A_{r,s}(n), their consequences for y_i x_i and x_i y_i,
    and the two cubic down-up identities."""
    K = coefficient_field(n)
    one = K.one
    rels: list[Relation] = []

    torus = [_g(kind, i) for i in range(1, n + 1) for kind in TORUS]
    for p, first in enumerate(torus):
        for second in torus[p + 1 :]:
            rels.append(Relation("torus", [(one, (first, second))], [(one, (second, first))]))
    for i in range(1, n + 1):
        for kind in TORUS:
            rels.append(Relation("torus", [(one, (_g(kind, i), _g(kind, i, -1)))], [(one, ())]))
            rels.append(Relation("torus", [(one, (_g(kind, i, -1), _g(kind, i)))], [(one, ())]))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            d = 1 if i == j else 0
            ri, si = r(n, i), s(n, i)
            for kind, q in (("rho", ri), ("sigma", si)):
                rels.append(Relation(
                    "torus-ladder",
                    [(one, (_g(kind, i), _g("x", j)))],
                    [(q**d, (_g("x", j), _g(kind, i)))],
                ))
                rels.append(Relation(
                    "torus-ladder",
                    [(one, (_g(kind, i), _g("y", j)))],
                    [(q**-d, (_g("y", j), _g(kind, i)))],
                ))

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i < j:
                for kind in LADDER:
                    rels.append(Relation(
                        "ladder-commute",
                        [(one, (_g(kind, i), _g(kind, j)))],
                        [(one, (_g(kind, j), _g(kind, i)))],
                    ))
            if i != j:
                rels.append(Relation(
                    "ladder-commute",
                    [(one, (_g("y", i), _g("x", j)))],
                    [(one, (_g("x", j), _g("y", i)))],
                ))

    for i in range(1, n + 1):
        ri, si = r(n, i), s(n, i)
        x, y = _g("x", i), _g("y", i)
        denom = ri**2 - si**2
        rels.append(Relation(
            "commutator",
            [(one, (y, x)), (-(ri**2), (x, y))],
            [(one, (_g("sigma", i, 2),))],
        ))
        rels.append(Relation(
            "commutator",
            [(one, (y, x)), (-(si**2), (x, y))],
            [(one, (_g("rho", i, 2),))],
        ))
        rels.append(Relation(
            "ladder-product",
            [(one, (y, x))],
            [(ri**2 / denom, (_g("rho", i, 2),)), (-(si**2) / denom, (_g("sigma", i, 2),))],
        ))
        rels.append(Relation(
            "ladder-product",
            [(one, (x, y))],
            [(denom**-1, (_g("rho", i, 2),)), (-(denom**-1), (_g("sigma", i, 2),))],
        ))
        alpha, beta = ri**2 + si**2, -(ri**2) * si**2
        rels.append(Relation(
            "down-up",
            [(one, (y, y, x))],
            [(alpha, (y, x, y)), (beta, (x, y, y))],
        ))
        rels.append(Relation(
            "down-up",
            [(one, (y, x, x))],
            [(alpha, (x, y, x)), (beta, (x, x, y))],
        ))
    return rels


def verify_presentation(n: int) -> CheckReport:
    """Normalize lhs - rhs of every relation and collect nonzero residuals."""
    if n < 1:
        raise IndexOutOfRange(f"rank n must be >= 1, got {n}")
    report = CheckReport(suite="presentation", n=n)
    for rel in presentation_relations(n):
        residual = evaluate_side(rel.lhs, n) - evaluate_side(rel.rhs, n)
        report.record(rel.name, element_text(residual) if residual else None)
    return report
