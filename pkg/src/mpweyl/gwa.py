"""The degree-n generalized Weyl algebra D(phi, t) as an independent product oracle.

D = K[rho_i^{+-1}, sigma_i^{+-1}] is stored structurally: a base ring element
maps a torus exponent vector (a_1..a_n, b_1..b_n) to its coefficient. A GWA
element maps a ladder key to a base ring coefficient written on the left. The
ladder key holds one signed integer per index: z_i > 0 means X_i^{z_i},
z_i < 0 means Y_i^{-z_i}.
"""

import random
from collections.abc import Mapping

from .algebra import (
    AlgebraElement,
    NormalMonomial,
    accumulate,
    element_text,
    multiply,
    normalize,
    random_word,
)
from .errors import IndexOutOfRange
from .reports import CheckReport
from .scalars import RationalScalar, coerce, r, s

TorusKey = tuple[int, ...]
LadderKey = tuple[int, ...]


class BaseRingElement:
    """Laurent polynomial in rho_i, sigma_i with coefficients in K."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[TorusKey, RationalScalar] | None = None):
        self.n = n
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, n: int, rho: tuple[int, ...], sigma: tuple[int, ...], coeff=1) -> "BaseRingElement":
        return cls(n, {tuple(rho) + tuple(sigma): coerce(n, coeff)})

    @classmethod
    def one(cls, n: int) -> "BaseRingElement":
        return cls.monomial(n, (0,) * n, (0,) * n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BaseRingElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "BaseRingElement") -> "BaseRingElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            accumulate(out, k, c)
        return BaseRingElement(self.n, out)

    def __neg__(self) -> "BaseRingElement":
        return BaseRingElement(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BaseRingElement") -> "BaseRingElement":
        return self + (-other)

    def __mul__(self, other: "BaseRingElement | RationalScalar | int") -> "BaseRingElement":
        if not isinstance(other, BaseRingElement):
            c = coerce(self.n, other)
            return BaseRingElement(self.n, {k: v * c for k, v in self.terms.items()})
        out: dict[TorusKey, RationalScalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                accumulate(out, tuple(a + b for a, b in zip(k1, k2)), c1 * c2)
        return BaseRingElement(self.n, out)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"BaseRingElement(n={self.n}, {element_text(from_gwa(GWAElement.base(self)))})"


class GWAElement:
    """Finite sum of d_k Z_k with d_k in D and Z_k a product of X_i or Y_i powers."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[LadderKey, BaseRingElement] | None = None):
        self.n = n
        self.terms = {k: d for k, d in (terms or {}).items() if d}

    @classmethod
    def base(cls, d: BaseRingElement) -> "GWAElement":
        return cls(d.n, {(0,) * d.n: d})

    @classmethod
    def ladder(cls, n: int, i: int, power: int) -> "GWAElement":
        """X_i^power for power > 0, Y_i^{-power} for power < 0."""
        key = tuple(power if j == i else 0 for j in range(1, n + 1))
        return cls(n, {key: BaseRingElement.one(n)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GWAElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "GWAElement") -> "GWAElement":
        out = dict(self.terms)
        for k, d in other.terms.items():
            out[k] = out[k] + d if k in out else d
        return GWAElement(self.n, out)

    def __sub__(self, other: "GWAElement") -> "GWAElement":
        return self + GWAElement(other.n, {k: -d for k, d in other.terms.items()})

    def __mul__(self, other: "GWAElement") -> "GWAElement":
        return gwa_multiply(self, other)


def phi_apply(i: int, e: BaseRingElement, power: int) -> BaseRingElement:
    """phi_i^power: rho_i -> r_i^{-power} rho_i and sigma_i -> s_i^{-power} sigma_i."""
    n = e.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"automorphism index {i} outside 1..{n}")
    if power == 0:
        return e
    ri, si = r(n, i), s(n, i)
    out = {}
    for k, c in e.terms.items():
        out[k] = c * ri ** (-power * k[i - 1]) * si ** (-power * k[n + i - 1])
    return BaseRingElement(n, out)


def phi_shift(e: BaseRingElement, powers: LadderKey) -> BaseRingElement:
    for i, p in enumerate(powers, 1):
        e = phi_apply(i, e, p)
    return e


def t_element(n: int, i: int) -> BaseRingElement:
    """t_i = (r_i^2 rho_i^2 - s_i^2 sigma_i^2) / (r_i^2 - s_i^2)."""
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"index {i} outside 1..{n}")
    ri, si = r(n, i), s(n, i)
    denom = ri**2 - si**2
    square = tuple(2 if j == i else 0 for j in range(1, n + 1))
    zeros = (0,) * n
    return BaseRingElement(
        n,
        {square + zeros: ri**2 / denom, zeros + square: -(si**2) / denom},
    )


def _ladder_product(n: int, i: int, left: int, right: int) -> tuple[BaseRingElement, int]:
    """Z_i^left Z_i^right = coeff * Z_i^result for the signed ladder exponents of one index."""
    one = BaseRingElement.one(n)
    if left >= 0 and right >= 0 or left <= 0 and right <= 0:
        return one, left + right
    t = t_element(n, i)
    coeff = one
    if left > 0:
        # X^u Y^v = prod_{k<m} phi^(u-k)(t) X^(u-m) Y^(v-m)
        u, v = left, -right
        m = min(u, v)
        for k in range(m):
            coeff = coeff * phi_apply(i, t, u - k)
        return coeff, (u - m) - (v - m)
    # Y^v X^u = prod_{k<m} phi^-(v-1-k)(t) Y^(v-m) X^(u-m)
    v, u = -left, right
    m = min(u, v)
    for k in range(m):
        coeff = coeff * phi_apply(i, t, -(v - 1 - k))
    return coeff, (u - m) - (v - m)


def gwa_multiply(a: GWAElement, b: GWAElement) -> GWAElement:
    """Product by the GWA rules Z d = phi^z(d) Z, Y_i X_i = t_i, X_i Y_i = phi_i(t_i)."""
    if a.n != b.n:
        raise IndexOutOfRange(f"cannot multiply rank {a.n} by rank {b.n}")
    n = a.n
    out: dict[LadderKey, BaseRingElement] = {}
    for ka, da in a.terms.items():
        for kb, db in b.terms.items():
            coeff = da * phi_shift(db, ka)
            key = []
            for i in range(1, n + 1):
                c, z = _ladder_product(n, i, ka[i - 1], kb[i - 1])
                coeff = coeff * c
                key.append(z)
            key_t = tuple(key)
            out[key_t] = out[key_t] + coeff if key_t in out else coeff
    return GWAElement(n, out)


def to_gwa(e: AlgebraElement) -> GWAElement:
    """x_i -> X_i, y_i -> Y_i, torus part -> base ring coefficient."""
    n = e.n
    out: dict[LadderKey, dict[TorusKey, RationalScalar]] = {}
    for m, c in e.terms.items():
        ladder = tuple(u - v for u, v in zip(m.x, m.y))
        out.setdefault(ladder, {})[m.rho + m.sigma] = c
    return GWAElement(n, {k: BaseRingElement(n, d) for k, d in out.items()})


def from_gwa(g: GWAElement) -> AlgebraElement:
    n = g.n
    out: dict[NormalMonomial, RationalScalar] = {}
    for ladder, d in g.terms.items():
        x = tuple(max(z, 0) for z in ladder)
        y = tuple(max(-z, 0) for z in ladder)
        for torus, c in d.terms.items():
            out[NormalMonomial(torus[:n], torus[n:], x, y)] = c
    return AlgebraElement(n, out)


def _gwa_text(g: GWAElement) -> str:
    return element_text(from_gwa(g))


def verify_gwa_relations(n: int) -> CheckReport:
    """Check Y_i X_i = t_i, X_i Y_i = phi_i(t_i), Z d = phi^z(d) Z and the ladder commutations."""
    if n < 1:
        raise IndexOutOfRange(f"rank n must be >= 1, got {n}")
    report = CheckReport(suite="gwa relations", n=n)

    def check(name: str, lhs: GWAElement, rhs: GWAElement, location: str | None = None) -> None:
        diff = lhs - rhs
        report.record(name, _gwa_text(diff) if diff else None, location)

    zeros = (0,) * n
    units = [tuple(1 if j == i else 0 for j in range(1, n + 1)) for i in range(1, n + 1)]
    torus_gens = []
    for unit in units:
        for sign in (1, -1):
            scaled = tuple(sign * a for a in unit)
            torus_gens.append(BaseRingElement.monomial(n, scaled, zeros))
            torus_gens.append(BaseRingElement.monomial(n, zeros, scaled))

    for i in range(1, n + 1):
        X, Y = GWAElement.ladder(n, i, 1), GWAElement.ladder(n, i, -1)
        t = t_element(n, i)
        check(f"Y{i}*X{i} = t{i}", gwa_multiply(Y, X), GWAElement.base(t))
        check(f"X{i}*Y{i} = phi{i}(t{i})", gwa_multiply(X, Y), GWAElement.base(phi_apply(i, t, 1)))
        ri, si = r(n, i), s(n, i)
        squared = BaseRingElement(n, {
            tuple(2 * a for a in units[i - 1]) + zeros: (ri**2 - si**2) ** -1,
            zeros + tuple(2 * a for a in units[i - 1]): -((ri**2 - si**2) ** -1),
        })
        check(f"phi{i}(t{i}) = (rho{i}^2 - sigma{i}^2)/(r{i}^2 - s{i}^2)",
              GWAElement.base(phi_apply(i, t, 1)), GWAElement.base(squared))
        for d in torus_gens:
            D = GWAElement.base(d)
            where = _gwa_text(D)
            check(
                f"X{i}*d = phi{i}(d)*X{i}",
                gwa_multiply(X, D),
                gwa_multiply(GWAElement.base(phi_apply(i, d, 1)), X),
                where,
            )
            check(
                f"Y{i}*d = phi{i}^-1(d)*Y{i}",
                gwa_multiply(Y, D),
                gwa_multiply(GWAElement.base(phi_apply(i, d, -1)), Y),
                where,
            )
        for j in range(1, n + 1):
            if j == i:
                continue
            Xj, Yj = GWAElement.ladder(n, j, 1), GWAElement.ladder(n, j, -1)
            check(f"X{i}*Y{j} = Y{j}*X{i}", gwa_multiply(X, Yj), gwa_multiply(Yj, X))
            if i < j:
                check(f"X{i}*X{j} = X{j}*X{i}", gwa_multiply(X, Xj), gwa_multiply(Xj, X))
                check(f"Y{i}*Y{j} = Y{j}*Y{i}", gwa_multiply(Y, Yj), gwa_multiply(Yj, Y))
            for k in range(1, n + 1):
                tk = t_element(n, k)
                check(
                    f"phi{i}*phi{j}(t{k}) = phi{j}*phi{i}(t{k})",
                    GWAElement.base(phi_apply(i, phi_apply(j, tk, 1), 1)),
                    GWAElement.base(phi_apply(j, phi_apply(i, tk, 1), 1)),
                )
    return report


def cross_engine_check(n: int, samples: int, rng: random.Random, max_length: int = 6) -> CheckReport:
    """Compare algebra.multiply with gwa_multiply on random pairs of words."""
    report = CheckReport(suite="gwa cross-engine", n=n)
    for sample in range(samples):
        w1 = random_word(n, rng.randint(0, max_length), rng)
        w2 = random_word(n, rng.randint(0, max_length), rng)
        a, b = normalize(w1, n), normalize(w2, n)
        via_gwa = from_gwa(gwa_multiply(to_gwa(a), to_gwa(b)))
        diff = multiply(a, b) - via_gwa
        report.record("multiply vs gwa_multiply", element_text(diff) if diff else None, f"sample {sample}")
        back = from_gwa(to_gwa(a)) - a
        report.record("from_gwa(to_gwa(a)) = a", element_text(back) if back else None, f"sample {sample}")
    return report


