"""Single-step rewriting on linear combinations of words.

This is a second, deliberately naive route to normal forms: every rule is one
local move, and the caller decides which word and which position fires next.
Running it under random choices and comparing against ``algebra.normalize``
gives evidence that the rule system is confluent.
"""

import random
from collections.abc import Callable, Sequence
from typing import TypeVar

from .algebra import (
    LADDER,
    TORUS,
    AlgebraElement,
    GeneratorSymbol,
    NormalMonomial,
    Word,
    accumulate,
    check_letter,
    element_text,
    normalize,
    random_word,
    word_text,
)
from .reports import CheckReport
from .scalars import RationalScalar, coefficient_field, r, s

T = TypeVar("T")
Choose = Callable[[Sequence[T]], T]


def leftmost(options: Sequence[T]) -> T:
    return options[0]


def _torus_key(letter: GeneratorSymbol) -> tuple[int, int]:
    return letter.index, TORUS.index(letter.kind)


def _pair_applies(left: GeneratorSymbol, right: GeneratorSymbol) -> bool:
    if (left.kind, left.index) == (right.kind, right.index):
        return True
    if left.kind in TORUS and right.kind in TORUS:
        return _torus_key(left) > _torus_key(right)
    if left.kind in LADDER and right.kind in TORUS:
        return True
    if left.kind in LADDER and right.kind in LADDER:
        return left.index >= right.index
    return False


def redexes(word: Word) -> list[int]:
    """Positions where some rule fires; position p covers letter p, or letters p and p+1."""
    found = []
    for p, letter in enumerate(word):
        if letter.exponent == 0:
            found.append(p)
        elif p + 1 < len(word) and word[p + 1].exponent != 0 and _pair_applies(letter, word[p + 1]):
            found.append(p)
    return found


def _letters(*letters: GeneratorSymbol) -> tuple[GeneratorSymbol, ...]:
    return tuple(letter for letter in letters if letter.exponent != 0)


def rewrite_at(word: Word, p: int, n: int) -> dict[Word, RationalScalar]:
    """Apply the rule at position p and return the resulting combination of words."""
    one = coefficient_field(n).one
    head, letter = word[:p], word[p]
    if letter.exponent == 0:
        return {head + word[p + 1 :]: one}
    right = word[p + 1]
    tail = word[p + 2 :]

    if (letter.kind, letter.index) == (right.kind, right.index):
        merged = GeneratorSymbol(letter.kind, letter.index, letter.exponent + right.exponent)
        return {head + _letters(merged) + tail: one}

    if letter.kind in TORUS and right.kind in TORUS:
        return {head + (right, letter) + tail: one}

    if letter.kind in LADDER and right.kind in TORUS:
        # ladder^u torus^e -> q^(+-u e) torus^e ladder^u
        coeff = one
        if letter.index == right.index:
            q = r(n, right.index) if right.kind == "rho" else s(n, right.index)
            sign = -1 if letter.kind == "x" else 1
            coeff = q ** (sign * letter.exponent * right.exponent)
        return {head + (right, letter) + tail: coeff}

    if letter.index != right.index:
        return {head + (right, letter) + tail: one}

    i = letter.index
    ri, si = r(n, i), s(n, i)
    denom = ri**2 - si**2
    rho2, sigma2 = GeneratorSymbol("rho", i, 2), GeneratorSymbol("sigma", i, 2)
    if letter.kind == "y":
        before = GeneratorSymbol("y", i, letter.exponent - 1)
        after = GeneratorSymbol("x", i, right.exponent - 1)
        terms = [(rho2, ri**2 / denom), (sigma2, -(si**2) / denom)]
    else:
        before = GeneratorSymbol("x", i, letter.exponent - 1)
        after = GeneratorSymbol("y", i, right.exponent - 1)
        terms = [(rho2, denom**-1), (sigma2, -(denom**-1))]
    out: dict[Word, RationalScalar] = {}
    for middle, c in terms:
        accumulate(out, head + _letters(before, middle, after) + tail, c)
    return out


def monomial_of_word(word: Word, n: int) -> NormalMonomial:
    """Read off a word with no redexes as a normal monomial."""
    m = NormalMonomial.unit(n)
    for letter in word:
        a, b, u, v = m.local(letter.index)
        a += letter.exponent if letter.kind == "rho" else 0
        b += letter.exponent if letter.kind == "sigma" else 0
        u += letter.exponent if letter.kind == "x" else 0
        v += letter.exponent if letter.kind == "y" else 0
        m = m.with_local(letter.index, (a, b, u, v))
    return m


def reduce(word: Word, n: int, choose: Choose = leftmost) -> AlgebraElement:
    """Rewrite until no redex is left, letting ``choose`` pick the word and the position."""
    for letter in word:
        check_letter(n, letter)
    state: dict[Word, RationalScalar] = {tuple(word): coefficient_field(n).one}
    while True:
        pending = sorted((w for w in state if redexes(w)), key=_word_key)
        if not pending:
            break
        target = choose(pending)
        p = choose(redexes(target))
        c = state.pop(target)
        for result, d in rewrite_at(target, p, n).items():
            accumulate(state, result, c * d)
    out: dict[NormalMonomial, RationalScalar] = {}
    for w, c in state.items():
        accumulate(out, monomial_of_word(w, n), c)
    return AlgebraElement(n, out)


def _word_key(word: Word) -> tuple:
    return tuple((letter.kind, letter.index, letter.exponent) for letter in word)


def confluence_check(n: int, samples: int, rng: random.Random, max_length: int = 8) -> CheckReport:
    """Reduce random words under random rewrite orders and compare with normalize."""
    report = CheckReport(suite="confluence", n=n)
    for sample in range(samples):
        word = random_word(n, rng.randint(0, max_length), rng)
        expected = normalize(word, n)
        got = reduce(word, n, choose=rng.choice)
        diff = got - expected
        report.record(word_text(word), element_text(diff) if diff else None, f"sample {sample}")
    return report


def associativity_check(n: int, samples: int, rng: random.Random, max_length: int = 4) -> CheckReport:
    """(ab)c = a(bc) and a(b + c) = ab + ac on random normalized words."""
    report = CheckReport(suite="associativity", n=n)
    for sample in range(samples):
        a, b, c = (normalize(random_word(n, rng.randint(0, max_length), rng), n) for _ in range(3))
        diff = (a * b) * c - a * (b * c)
        report.record("(ab)c = a(bc)", element_text(diff) if diff else None, f"sample {sample}")
        diff = a * (b + c) - (a * b + a * c)
        report.record("a(b+c) = ab+ac", element_text(diff) if diff else None, f"sample {sample}")
    return report
