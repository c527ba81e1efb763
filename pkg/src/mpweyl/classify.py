"""Breaks, orbit classes and simple weight modules.

A maximal ideal of the torus ring is given by its coordinates (mu, nu). The
automorphisms phi_i move it along an orbit, phi^k(mu, nu) = (r^k mu, s^k nu).
Index j is a break of an ideal when nu_j = +-(r_j/s_j) mu_j; along the orbit
that happens at exactly one shift p_j when nu_j/mu_j = +-(r_j/s_j)^{p_j+1}, and
never otherwise. The break set J cuts the orbit into 2^|J| classes, one simple
weight module each.
"""

import itertools
from collections.abc import Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from .errors import IndexOutOfRange, NotSameOrbit, ParameterCountError, ZeroCoordinate
from .modules import BrokenWeightModule, WeightModule, coerce_scalar_fields
from .reports import CheckReport
from .scalars import Scalar, coefficient_field, monomial_of, r, ratio_as_signed_power, s, scalar_text


class IdealCoordinates(BaseModel):
    """m = <rho_i - mu_i, sigma_i - nu_i>."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    mu: list[Scalar]
    nu: list[Scalar]

    @model_validator(mode="before")
    @classmethod
    def coerce_scalars(cls, data):
        return coerce_scalar_fields(data, "mu", "nu")

    @model_validator(mode="after")
    def check_coordinates(self) -> "IdealCoordinates":
        if len(self.mu) != self.n or len(self.nu) != self.n:
            raise ParameterCountError(f"mu and nu need {self.n} entries each")
        for name, values in (("mu", self.mu), ("nu", self.nu)):
            for i, value in enumerate(values, 1):
                if not value:
                    raise ZeroCoordinate(f"{name}_{i} is zero")
        return self

    def shifted(self, k: Sequence[int]) -> "IdealCoordinates":
        """phi_1^{k_1} ... phi_n^{k_n} applied to the ideal."""
        n = self.n
        return IdealCoordinates(
            n=n,
            mu=[self.mu[i] * r(n, i + 1) ** k[i] for i in range(n)],
            nu=[self.nu[i] * s(n, i + 1) ** k[i] for i in range(n)],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IdealCoordinates):
            return NotImplemented
        return self.n == other.n and self.mu == other.mu and self.nu == other.nu

    def text(self) -> str:
        mu = ", ".join(scalar_text(v) for v in self.mu)
        nu = ", ".join(scalar_text(v) for v in self.nu)
        return f"mu=({mu}) nu=({nu})"


class Break(BaseModel):
    j: int
    p: int
    sign: int


class BreakReport(BaseModel):
    """Break set of an orbit, its shifts and the designated maximal-break ideal."""

    n: int
    source: IdealCoordinates
    J: list[int]
    breaks: list[Break]
    designated: IdealCoordinates

    @property
    def q(self) -> int:
        return len(self.J)

    def break_coordinates(self) -> list[tuple[Scalar, Scalar]]:
        """(mu_j, nu_j) of the designated ideal for j in J; constant along the orbit."""
        return [(self.designated.mu[j - 1], self.designated.nu[j - 1]) for j in self.J]

    def shift(self, j: int) -> int:
        for b in self.breaks:
            if b.j == j:
                return b.p
        raise KeyError(j)


def detect_breaks(c: IdealCoordinates) -> BreakReport:
    n = c.n
    breaks = []
    for j in range(1, n + 1):
        solved = ratio_as_signed_power(c.nu[j - 1] / c.mu[j - 1], j)
        if solved is not None:
            sign, m = solved
            breaks.append(Break(j=j, p=m - 1, sign=sign))
    shift = [0] * n
    for b in breaks:
        shift[b.j - 1] = b.p
    return BreakReport(
        n=n,
        source=c,
        J=[b.j for b in breaks],
        breaks=breaks,
        designated=c.shifted(shift),
    )


def has_break(c: IdealCoordinates, j: int) -> bool:
    """The literal criterion nu_j = +-(r_j/s_j) mu_j."""
    solved = ratio_as_signed_power(c.nu[j - 1] / c.mu[j - 1], j)
    return solved is not None and solved[1] == 1


class SimpleModuleDescriptor(BaseModel):
    """One simple weight module of the orbit and the shifts it is supported on."""

    alpha: list[int]
    support: list[str]
    module: WeightModule | BrokenWeightModule


def _support_rule(br: BreakReport, alpha: Sequence[int]) -> list[str]:
    rules = []
    for j, a in zip(br.J, alpha):
        p = br.shift(j)
        rules.append(f"k{j} >= {p + 1}" if a else f"k{j} <= {p}")
    return rules


def enumerate_simples(br: BreakReport) -> list[SimpleModuleDescriptor]:
    """One descriptor when J is empty, otherwise one per alpha in {0,1}^|J|."""
    c = br.source
    if not br.J:
        return [SimpleModuleDescriptor(alpha=[], support=[], module=WeightModule(n=c.n, mu=c.mu, nu=c.nu))]
    out = []
    for alpha in itertools.product((0, 1), repeat=br.q):
        module = BrokenWeightModule(n=c.n, mu=c.mu, nu=c.nu, J=br.J, alpha=list(alpha))
        out.append(SimpleModuleDescriptor(alpha=list(alpha), support=_support_rule(br, alpha), module=module))
    return out


def orbit_class(br: BreakReport, k: Sequence[int]) -> list[int]:
    """alpha of the class containing phi^k of the source ideal."""
    return [1 if k[j - 1] >= br.shift(j) + 1 else 0 for j in br.J]


def partition_check(br: BreakReport, radius: int) -> CheckReport:
    """Every shift in the box lies in exactly one simple's support."""
    report = CheckReport(suite="orbit partition", n=br.n)
    simples = enumerate_simples(br)
    for k in itertools.product(range(-radius, radius + 1), repeat=br.n):
        owners = [d.alpha for d in simples if d.module.in_support(k)]
        if len(owners) != 1:
            report.record("one class per shift", f"{len(owners)} classes contain it", f"k={list(k)}")
        elif owners[0] != orbit_class(br, k):
            report.record("orbit_class agrees", f"support says {owners[0]}", f"k={list(k)}")
        else:
            report.record("one class per shift", None, f"k={list(k)}")
    return report


def shift_between(c1: IdealCoordinates, c2: IdealCoordinates) -> list[int]:
    """Solve c2 = phi^k(c1) exactly."""
    if c1.n != c2.n:
        raise NotSameOrbit(f"ranks differ: {c1.n} and {c2.n}")
    n = c1.n
    k = []
    for i in range(1, n + 1):
        powers = []
        for pos, (a, b) in ((i - 1, (c1.mu, c2.mu)), (n + i - 1, (c1.nu, c2.nu))):
            split = monomial_of(b[i - 1] / a[i - 1])
            if split is None or split[0] != 1:
                raise NotSameOrbit(f"coordinate {i} is not a parameter power apart")
            exponents = split[1]
            if any(e for idx, e in enumerate(exponents) if idx != pos):
                raise NotSameOrbit(f"coordinate {i} differs by a foreign parameter")
            powers.append(exponents[pos])
        if powers[0] != powers[1]:
            raise NotSameOrbit(f"rho and sigma shifts differ at index {i}")
        k.append(powers[0])
    return k


def equivalence_check(c1: IdealCoordinates, c2: IdealCoordinates) -> bool:
    """True iff the two ideals of one orbit lie in the same class."""
    k = shift_between(c1, c2)
    br = detect_breaks(c1)
    return orbit_class(br, [0] * c1.n) == orbit_class(br, k)


def planted_breaks_check(n: int, radius: int) -> CheckReport:
    """Plant breaks at every subset J and confirm counts, invariance and partition."""
    report = CheckReport(suite="classification", n=n)
    one = coefficient_field(n).one
    for size in range(n + 1):
        for J in itertools.combinations(range(1, n + 1), size):
            mu = [one] * n
            nu = []
            for i in range(1, n + 1):
                ri, si = r(n, i), s(n, i)
                nu.append((ri / si) ** i if i in J else ri + si)
            c = IdealCoordinates(n=n, mu=mu, nu=nu)
            br = detect_breaks(c)
            label = f"J={list(J)}"
            report.record("break set", None if br.J == list(J) else f"found {br.J}", label)
            simples = enumerate_simples(br)
            expected = 2 ** len(J) if J else 1
            report.record(
                "simple count",
                None if len(simples) == expected else f"{len(simples)} instead of {expected}",
                label,
            )
            for j in br.J:
                report.record(
                    "designated ideal breaks",
                    None if has_break(br.designated, j) else f"no break at {j}",
                    label,
                )
            for k in itertools.product(range(-radius, radius + 1), repeat=n):
                moved = detect_breaks(c.shifted(k))
                same = moved.J == br.J and moved.break_coordinates() == br.break_coordinates()
                report.record("orbit invariance", None if same else "break data moved", f"{label} k={list(k)}")
                for j in range(1, n + 1):
                    if j not in br.J and has_break(c.shifted(k), j):
                        report.record("no stray breaks", f"break at {j}", f"{label} k={list(k)}")
            partial = partition_check(br, radius)
            report.checked += partial.checked
            report.residuals.extend(partial.residuals)
    return report


Bits = tuple[int, ...]


def _bits_text(bits: Bits) -> str:
    return "".join(str(b) for b in bits)


class Arrow(BaseModel):
    name: str
    j: int
    source: str
    target: str


class QuiverPresentation(BaseModel):
    """Objects {0,1}^|J|, arrows a_j up and b_j down, ab = ba = 0 and commuting squares."""

    J: list[int]
    objects: list[str]
    arrows: list[Arrow]
    relations: list[str]
    dimension: int

    def dot(self) -> str:
        lines = ["digraph skeleton {", "  rankdir=LR;"]
        lines += [f'  "{obj}";' for obj in self.objects]
        lines += [
            f'  "{arrow.source}" -> "{arrow.target}" [label="{arrow.name}{arrow.j}"];'
            for arrow in self.arrows
        ]
        lines.append("}")
        return "\n".join(lines)


class QuiverAlgebra:
    """The skeleton algebra as composable morphisms between bit vectors.

    Hom(alpha, beta) is one-dimensional for every pair of objects; the basis
    morphism alpha -> beta changes each differing coordinate by one arrow.
    Composing alpha -> beta -> gamma is zero exactly when some coordinate goes
    out and comes back (alpha_t = gamma_t != beta_t), since ab = ba = 0.
    """

    def __init__(self, q: int):
        self.q = q
        self.objects: list[Bits] = list(itertools.product((0, 1), repeat=q))
        self.basis: list[tuple[Bits, Bits]] = [(a, b) for a in self.objects for b in self.objects]
        self._position = {m: i for i, m in enumerate(self.basis)}

    @staticmethod
    def compose(first: tuple[Bits, Bits], then: tuple[Bits, Bits]) -> tuple[Bits, Bits] | None:
        """then o first, or None when the composite is zero."""
        a, b = first
        b2, c = then
        if b != b2:
            return None
        if any(x == z != y for x, y, z in zip(a, b, c)):
            return None
        return a, c

    def arrows(self) -> list[tuple[str, int, tuple[Bits, Bits]]]:
        """(name, coordinate, morphism) for every a and b arrow."""
        out = []
        for alpha in self.objects:
            for t in range(self.q):
                if alpha[t] == 0:
                    beta = alpha[:t] + (1,) + alpha[t + 1 :]
                    out.append(("a", t, (alpha, beta)))
                    out.append(("b", t, (beta, alpha)))
        return out

    def left_matrix(self, morphism: tuple[Bits, Bits]) -> np.ndarray:
        """Matrix of f -> morphism o f on the basis."""
        size = len(self.basis)
        matrix = np.zeros((size, size), dtype=np.int64)
        for col, f in enumerate(self.basis):
            g = self.compose(f, morphism)
            if g is not None:
                matrix[self._position[g], col] = 1
        return matrix

    def dimension(self) -> int:
        """Span of all paths, closed under composition from identities and arrows."""
        found = {(obj, obj) for obj in self.objects}
        found |= {m for _, _, m in self.arrows()}
        frontier = set(found)
        arrows = [m for _, _, m in self.arrows()]
        while frontier:
            new = set()
            for f in frontier:
                for g in arrows:
                    h = self.compose(f, g)
                    if h is not None and h not in found:
                        new.add(h)
            found |= new
            frontier = new
        return len(found)

    def verify(self, J: Sequence[int] | None = None) -> CheckReport:
        J = list(J) if J is not None else list(range(1, self.q + 1))
        report = CheckReport(suite="skeleton", n=self.q)
        size = len(self.basis)
        zero = np.zeros((size, size), dtype=np.int64)
        for alpha in self.objects:
            for t in range(self.q):
                if alpha[t]:
                    continue
                beta = alpha[:t] + (1,) + alpha[t + 1 :]
                La, Lb = self.left_matrix((alpha, beta)), self.left_matrix((beta, alpha))
                where = f"{_bits_text(alpha)}<->{_bits_text(beta)}"
                report.record(f"b{J[t]}*a{J[t]} = 0", None if np.array_equal(Lb @ La, zero) else "nonzero", where)
                report.record(f"a{J[t]}*b{J[t]} = 0", None if np.array_equal(La @ Lb, zero) else "nonzero", where)
        for alpha in self.objects:
            for s_, t in itertools.combinations(range(self.q), 2):
                for ds, dt in itertools.product((1, -1), repeat=2):
                    if not _can_step(alpha, s_, ds) or not _can_step(alpha, t, dt):
                        continue
                    via_s = _step(alpha, s_, ds)
                    via_t = _step(alpha, t, dt)
                    corner = _step(via_s, t, dt)
                    lhs = self.left_matrix((via_s, corner)) @ self.left_matrix((alpha, via_s))
                    rhs = self.left_matrix((via_t, corner)) @ self.left_matrix((alpha, via_t))
                    report.record(
                        f"square {J[s_]},{J[t]}",
                        None if np.array_equal(lhs, rhs) else "paths differ",
                        f"{_bits_text(alpha)}->{_bits_text(corner)}",
                    )
        dim = self.dimension()
        report.record("dimension 4^q", None if dim == 4**self.q else f"dimension {dim}")
        return report


def _can_step(bits: Bits, t: int, direction: int) -> bool:
    return bits[t] == (0 if direction == 1 else 1)


def _step(bits: Bits, t: int, direction: int) -> Bits:
    return bits[:t] + (bits[t] + direction,) + bits[t + 1 :]


def skeleton(J: Sequence[int]) -> QuiverPresentation:
    J = sorted(set(J))
    if not J:
        return QuiverPresentation(J=[], objects=["ω"], arrows=[], relations=[], dimension=1)
    algebra = QuiverAlgebra(len(J))
    arrows = [
        Arrow(name=name, j=J[t], source=_bits_text(src), target=_bits_text(dst))
        for name, t, (src, dst) in algebra.arrows()
    ]
    relations = []
    for alpha in algebra.objects:
        for t in range(algebra.q):
            if alpha[t] == 0:
                beta = _step(alpha, t, 1)
                relations.append(f"b{J[t]}*a{J[t]} = 0 at {_bits_text(alpha)}")
                relations.append(f"a{J[t]}*b{J[t]} = 0 at {_bits_text(beta)}")
    for s_, t in itertools.combinations(range(algebra.q), 2):
        relations.append(f"arrows at {J[s_]} and {J[t]} commute")
    return QuiverPresentation(
        J=J,
        objects=[_bits_text(obj) for obj in algebra.objects],
        arrows=arrows,
        relations=relations,
        dimension=algebra.dimension(),
    )


def quiver_dot(J: Sequence[int]) -> str:
    return skeleton(J).dot()


class QuiverSimple(BaseModel):
    """S_alpha: K at one object, zero elsewhere, every arrow acting as 0."""

    object: str
    dimension_vector: dict[str, int]


def quiver_simples(q: int) -> list[QuiverSimple]:
    if q < 0:
        raise IndexOutOfRange(f"q must be >= 0, got {q}")
    if q == 0:
        return [QuiverSimple(object="ω", dimension_vector={"ω": 1})]
    objects = [_bits_text(bits) for bits in itertools.product((0, 1), repeat=q)]
    return [
        QuiverSimple(object=alpha, dimension_vector={beta: int(alpha == beta) for beta in objects})
        for alpha in objects
    ]


def classification_payload(br: BreakReport) -> dict:
    simples = enumerate_simples(br)
    return {
        "n": br.n,
        "J": br.J,
        "breaks": [b.model_dump() for b in br.breaks],
        "designated": br.designated.model_dump(mode="json", exclude={"n"}),
        "simple_count": len(simples),
        "simples": [
            {"alpha": d.alpha, "support": d.support, "family": d.module.family} for d in simples
        ],
    }
