"""U_{r,s}(sl_n) through its image in A_{r,s}(n).

omega_i -> rho_i sigma_{i+1}, omega'_i -> rho_{i+1} sigma_i,
e_i -> y_{i+1} x_i, f_i -> y_i x_{i+1}.
"""

import itertools
import random
from collections import deque
from collections.abc import Sequence
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict

from .algebra import AlgebraElement, GeneratorSymbol, accumulate, element_text, normalize
from .errors import IndexOutOfRange, UnsupportedIndex
from .modules import ModuleVector, PolynomialModule, act_element
from .reports import CheckReport
from .scalars import RationalScalar, Scalar, coefficient_field, quantum_integer, r, s, specialize_uniform

U_KINDS = ("e", "f", "omega", "omega_prime")
_NAMES = {"e": "e", "f": "f", "omega": "w", "omega_prime": "wp"}


class UGenerator(NamedTuple):
    kind: str
    index: int
    exponent: int = 1

    def text(self) -> str:
        name = f"{_NAMES[self.kind]}{self.index}"
        return name if self.exponent == 1 else f"{name}^{self.exponent}"


def _check(n: int, g: UGenerator) -> None:
    if n < 2:
        raise IndexOutOfRange(f"U_(r,s)(sl_n) needs n >= 2, got {n}")
    if g.kind not in U_KINDS:
        raise IndexOutOfRange(f"unknown quantum group generator {g.kind!r}")
    if not 1 <= g.index < n:
        raise IndexOutOfRange(f"{g.text()} needs index in 1..{n - 1}")
    if g.kind in ("e", "f") and g.exponent < 0:
        raise IndexOutOfRange(f"{g.text()} cannot carry a negative exponent")


def u_image(g: UGenerator, n: int) -> AlgebraElement:
    _check(n, g)
    i, e = g.index, g.exponent
    if g.kind == "omega":
        return normalize((GeneratorSymbol("rho", i, e), GeneratorSymbol("sigma", i + 1, e)), n)
    if g.kind == "omega_prime":
        return normalize((GeneratorSymbol("rho", i + 1, e), GeneratorSymbol("sigma", i, e)), n)
    if g.kind == "e":
        base = normalize((GeneratorSymbol("y", i + 1), GeneratorSymbol("x", i)), n)
    else:
        base = normalize((GeneratorSymbol("y", i), GeneratorSymbol("x", i + 1)), n)
    return base**e


def u_image_word(gens: Sequence[UGenerator], n: int) -> AlgebraElement:
    result = AlgebraElement.one(n)
    for g in gens:
        result = result * u_image(g, n)
    return result


def q_commutator(a: AlgebraElement, b: AlgebraElement, q: RationalScalar | int = 1) -> AlgebraElement:
    """[a, b]_q = ab - q ba."""
    return a * b - (b * a).scale(q)


def pairing(i: int, j: int) -> int:
    """(e_i, alpha_j) for the orthonormal form and alpha_j = e_j - e_{j+1}."""
    return int(i == j) - int(i == j + 1)


def u_relations(n: int) -> list[tuple[str, AlgebraElement, AlgebraElement]]:
    """(name, lhs image, rhs image) for every defining relation of U_{r,s}(sl_n)."""
    if n < 2:
        raise IndexOutOfRange(f"U_(r,s)(sl_n) needs n >= 2, got {n}")
    one = AlgebraElement.one(n)
    rels: list[tuple[str, AlgebraElement, AlgebraElement]] = []

    def img(kind: str, i: int, e: int = 1) -> AlgebraElement:
        return u_image(UGenerator(kind, i, e), n)

    torus = [(kind, i) for i in range(1, n) for kind in ("omega", "omega_prime")]
    for p, (k1, i1) in enumerate(torus):
        for k2, i2 in torus[p + 1 :]:
            a, b = img(k1, i1), img(k2, i2)
            rels.append((f"{UGenerator(k1, i1).text()}*{UGenerator(k2, i2).text()} commute", a * b, b * a))
    for kind, i in torus:
        rels.append((f"{UGenerator(kind, i).text()} invertible", img(kind, i) * img(kind, i, -1), one))

    for i in range(1, n):
        ri, si = r(n, i), s(n, i)
        rn, sn = r(n, i + 1), s(n, i + 1)
        for j in range(1, n):
            e, f = img("e", j), img("f", j)
            w, wp = img("omega", i), img("omega_prime", i)
            q_w = ri ** pairing(i, j) * sn ** pairing(i + 1, j)
            q_wp = rn ** pairing(i + 1, j) * si ** pairing(i, j)
            rels.append((f"w{i}*e{j} = q*e{j}*w{i}", w * e, (e * w).scale(q_w)))
            rels.append((f"w{i}*f{j} = q^-1*f{j}*w{i}", w * f, (f * w).scale(q_w**-1)))
            rels.append((f"wp{i}*e{j} = q*e{j}*wp{i}", wp * e, (e * wp).scale(q_wp)))
            rels.append((f"wp{i}*f{j} = q^-1*f{j}*wp{i}", wp * f, (f * wp).scale(q_wp**-1)))

    for i in range(1, n):
        for j in range(1, n):
            lhs = q_commutator(img("e", i), img("f", j))
            if i == j:
                ri, si = r(n, i), s(n, i)
                rhs = (img("omega", i, 2) - img("omega_prime", i, 2)).scale((ri**2 - si**2) ** -1)
            else:
                rhs = AlgebraElement.zero(n)
            rels.append((f"[e{i},f{j}]", lhs, rhs))

    zero = AlgebraElement.zero(n)
    for i in range(1, n - 1):
        rn, sn = r(n, i + 1), s(n, i + 1)
        ei, ej = img("e", i), img("e", i + 1)
        fi, fj = img("f", i), img("f", i + 1)
        inner_e = q_commutator(ei, ej, rn**2)
        inner_f = q_commutator(fi, fj, rn**-2)
        rels.append((f"[e{i},[e{i},e{i + 1}]]", q_commutator(ei, inner_e, sn**2), zero))
        rels.append((f"[[e{i},e{i + 1}],e{i + 1}]", q_commutator(inner_e, ej, sn**2), zero))
        rels.append((f"[f{i},[f{i},f{i + 1}]]", q_commutator(fi, inner_f, sn**-2), zero))
        rels.append((f"[[f{i},f{i + 1}],f{i + 1}]", q_commutator(inner_f, fj, sn**-2), zero))
    return rels


def verify_u_relations(n: int) -> CheckReport:
    """Residual of every relation in A. A relation that vanishes only once r_i = r_1
    and s_i = s_1 is recorded as specialized-only with its generic residual;
    anything else nonzero is a residual."""
    report = CheckReport(suite="quantum group relations", n=n)
    for name, lhs, rhs in u_relations(n):
        residual = lhs - rhs
        if not residual:
            report.record(name, None)
            continue
        uniform = residual.map_coefficients(specialize_uniform)
        if uniform:
            report.record(name, element_text(residual))
        else:
            report.record_specialized(name, element_text(residual))
    return report


def _u_act_basis(g: UGenerator, k: tuple[int, ...], n: int) -> dict[tuple[int, ...], RationalScalar]:
    i = g.index
    if g.kind == "omega":
        return {k: (r(n, i) ** k[i - 1] * s(n, i + 1) ** k[i]) ** g.exponent}
    if g.kind == "omega_prime":
        return {k: (r(n, i + 1) ** k[i] * s(n, i) ** k[i - 1]) ** g.exponent}
    coeff = coefficient_field(n).one
    current = list(k)
    for _ in range(g.exponent):
        if g.kind == "e":
            coeff *= quantum_integer(n, i + 1, current[i])
            current[i - 1] += 1
            current[i] -= 1
        else:
            coeff *= quantum_integer(n, i, current[i - 1])
            current[i - 1] -= 1
            current[i] += 1
        if not coeff:
            return {}
    return {tuple(current): coeff}


def u_act(g: UGenerator, v: ModuleVector, n: int) -> ModuleVector:
    """The action on P(n) read off the weight display."""
    _check(n, g)
    out: dict[tuple[int, ...], RationalScalar] = {}
    for k, c in v.terms.items():
        if len(k) != n or any(part < 0 for part in k):
            raise UnsupportedIndex(f"z{k} is not a monomial of P({n})")
        for k2, d in _u_act_basis(g, k, n).items():
            accumulate(out, k2, c * d)
    return ModuleVector(n, out)


class UWeight(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    eta: list[Scalar]
    theta: list[Scalar]

    def key(self) -> tuple:
        return tuple(self.eta) + tuple(self.theta)


def weight_of(k: Sequence[int], n: int) -> UWeight:
    """eta_i = r_i^{k_i} s_{i+1}^{k_{i+1}}, theta_i = r_{i+1}^{k_{i+1}} s_i^{k_i}."""
    if len(k) != n or any(part < 0 for part in k):
        raise UnsupportedIndex(f"z{tuple(k)} is not a monomial of P({n})")
    eta = [r(n, i) ** k[i - 1] * s(n, i + 1) ** k[i] for i in range(1, n)]
    theta = [r(n, i + 1) ** k[i] * s(n, i) ** k[i - 1] for i in range(1, n)]
    return UWeight(eta=eta, theta=theta)


def u_weight_separation_check(n: int, radius: int) -> CheckReport:
    """Monomials z(k), 0 <= k_i <= radius, carry pairwise distinct weights that
    match the omega_i and omega_i' eigenvalues."""
    report = CheckReport(suite="quantum group weights", n=n)
    seen: dict[tuple, tuple[int, ...]] = {}
    for k in itertools.product(range(radius + 1), repeat=n):
        weight = weight_of(k, n)
        first = seen.setdefault(weight.key(), k)
        report.record("distinct weights", None if first == k else f"same weight as z{first}", f"z{k}")
        v = ModuleVector.basis(n, k)
        for i in range(1, n):
            for kind, values in (("omega", weight.eta), ("omega_prime", weight.theta)):
                g = UGenerator(kind, i)
                diff = u_act(g, v, n) - v.scale(values[i - 1])
                report.record(f"{g.text()} eigenvalue", diff.text() if diff else None, f"z{k}")
    return report


def degree_monomials(m: int, n: int) -> list[tuple[int, ...]]:
    """All k in N^n with k_1 + ... + k_n = m."""
    return [k for k in itertools.product(range(m + 1), repeat=n) if sum(k) == m]


def graded_component_check(m: int, n: int) -> CheckReport:
    """Degree preservation, connectivity under e_i, f_i and the highest weight vector of P(n)_m."""
    if m < 0:
        raise IndexOutOfRange(f"degree must be >= 0, got {m}")
    report = CheckReport(suite=f"graded component P({n})_{m}", n=n)
    poly = PolynomialModule(n=n)
    monomials = degree_monomials(m, n)
    ladder = [UGenerator(kind, i) for i in range(1, n) for kind in ("e", "f")]
    edges: dict[tuple[int, ...], set[tuple[int, ...]]] = {k: set() for k in monomials}
    for k in monomials:
        v = ModuleVector.basis(n, k)
        for g in ladder:
            image = u_act(g, v, n)
            for k2, _ in image:
                report.record(f"{g.text()} keeps degree", None if sum(k2) == m else f"degree {sum(k2)}", f"z{k}")
                edges[k].add(k2)
            via_algebra = act_element(poly, u_image(g, n), v)
            diff = image - via_algebra
            report.record(f"{g.text()} matches its image", diff.text() if diff else None, f"z{k}")
    top = (m,) + (0,) * (n - 1)
    for i in range(1, n):
        killed = u_act(UGenerator("e", i), ModuleVector.basis(n, top), n)
        report.record(f"e{i} kills z{top}", killed.text() if killed else None)
    seen = {top}
    queue = deque([top])
    while queue:
        k = queue.popleft()
        for k2 in edges[k]:
            if k2 not in seen:
                seen.add(k2)
                queue.append(k2)
    missing = [k for k in monomials if k not in seen]
    report.record("connected", f"unreached {missing}" if missing else None)
    return report


def random_u_word(n: int, length: int, rng: random.Random) -> list[UGenerator]:
    word = []
    for _ in range(length):
        kind = rng.choice(U_KINDS)
        i = rng.randint(1, n - 1)
        e = rng.choice((-1, 1)) if kind.startswith("omega") else 1
        word.append(UGenerator(kind, i, e))
    return word


def homomorphism_check(n: int, radius: int, samples: int, rng: random.Random, max_length: int = 4) -> CheckReport:
    """u_act along a word agrees with act_element of the word's image on P(n)."""
    report = CheckReport(suite="quantum group action", n=n)
    poly = PolynomialModule(n=n)
    box = [k for k in itertools.product(range(radius + 1), repeat=n)]
    for sample in range(samples):
        word = random_u_word(n, rng.randint(1, max_length), rng)
        k = rng.choice(box)
        v = ModuleVector.basis(n, k)
        direct = v
        for g in reversed(word):
            direct = u_act(g, direct, n)
        via_image = act_element(poly, u_image_word(word, n), v)
        diff = direct - via_image
        label = "*".join(g.text() for g in word)
        report.record(label, diff.text() if diff else None, f"z{k}")
    return report
