"""Module families of A_{r,s}(n) and their exact actions.

Families:
  poly       P(n), basis z(k), k in N^n
  verma      V(lam, zeta), basis v(k), k in N^n
  weight     Z(mu, nu), basis z(k), k in Z^n, orbit without breaks
  broken     Z_{J,alpha}(mu, nu), basis z(k), k restricted on the break set J
  whittaker  W(xi), basis w(k, l) = rho^k sigma^l (x) w, (k, l) in Z^{2n}

Images that fall outside a family's support are dropped.
"""

import itertools
from collections import deque
from collections.abc import Iterator, Mapping, Sequence
from typing import Annotated, ClassVar, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, computed_field, model_validator

from .algebra import (
    LADDER,
    TORUS,
    AlgebraElement,
    GeneratorSymbol,
    Word,
    accumulate,
    check_letter,
    presentation_relations,
    word_of,
)
from .errors import ModuleSpecError, ParameterCountError, UnsupportedIndex
from .reports import CheckReport
from .scalars import (
    RationalScalar,
    Scalar,
    coefficient_field,
    coerce,
    quantum_integer,
    r,
    s,
    scalar_payload,
    scalar_text,
)

BasisIndex = tuple[int, ...]
Sign = Literal[1, -1]


class ModuleVector:
    """Finitely supported vector over basis indices, zero coefficients pruned."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[BasisIndex, RationalScalar] | None = None):
        self.n = n
        self.terms: dict[BasisIndex, RationalScalar] = {
            tuple(k): c for k, c in (terms or {}).items() if c
        }

    @classmethod
    def basis(cls, n: int, index: Sequence[int], coeff: RationalScalar | int = 1) -> "ModuleVector":
        return cls(n, {tuple(index): coerce(n, coeff)})

    @classmethod
    def zero(cls, n: int) -> "ModuleVector":
        return cls(n)

    def __iter__(self) -> Iterator[tuple[BasisIndex, RationalScalar]]:
        for k in sorted(self.terms):
            yield k, self.terms[k]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "ModuleVector") -> "ModuleVector":
        out = dict(self.terms)
        for k, c in other.terms.items():
            accumulate(out, k, c)
        return ModuleVector(self.n, out)

    def __neg__(self) -> "ModuleVector":
        return ModuleVector(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "ModuleVector") -> "ModuleVector":
        return self + (-other)

    def scale(self, c: RationalScalar | int) -> "ModuleVector":
        c = coerce(self.n, c)
        return ModuleVector(self.n, {k: c * v for k, v in self.terms.items()})

    def payload(self) -> dict:
        return {
            "terms": [{"index": list(k), "coeff": scalar_payload(c)} for k, c in self]
        }

    def text(self, symbol: str = "z") -> str:
        if not self:
            return "0"
        pieces = []
        for k, c in self:
            basis = f"{symbol}({','.join(str(part) for part in k)})"
            pieces.append(basis if c == 1 else f"({scalar_text(c)}) * {basis}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"ModuleVector({self.text()})"


def coerce_scalar_fields(data: dict, *keys: str) -> dict:
    if not isinstance(data, dict) or "n" not in data:
        return data
    data = dict(data)
    n = data["n"]
    for key in keys:
        if key in data and data[key] is not None:
            data[key] = [coerce(n, value) for value in data[key]]
    return data


class ModuleBase(BaseModel):
    """Shared behaviour: support test, boxes and the per-basis action."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int = Field(ge=1)

    basis_symbol: ClassVar[str] = "z"

    def index_length(self) -> int:
        return self.n

    def in_support(self, index: BasisIndex) -> bool:
        raise NotImplementedError

    def act_basis(self, letter: GeneratorSymbol, index: BasisIndex) -> dict[BasisIndex, RationalScalar]:
        raise NotImplementedError

    def label(self) -> str:
        return self.family  # type: ignore[attr-defined]


class WeightFamily(ModuleBase):
    """Families with basis z(k) of simultaneous rho/sigma eigenvectors."""

    def rho_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        raise NotImplementedError

    def sigma_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        raise NotImplementedError

    def lowering(self, i: int, k: BasisIndex) -> RationalScalar:
        """Coefficient c with y_i z(k) = c z(k - e_i)."""
        raise NotImplementedError

    def act_basis(self, letter: GeneratorSymbol, index: BasisIndex) -> dict[BasisIndex, RationalScalar]:
        i, e = letter.index, letter.exponent
        if letter.kind == "rho":
            return {index: self.rho_eigenvalue(i, index) ** e}
        if letter.kind == "sigma":
            return {index: self.sigma_eigenvalue(i, index) ** e}
        coeff = coefficient_field(self.n).one
        k = list(index)
        for _ in range(e):
            if letter.kind == "y":
                coeff *= self.lowering(i, tuple(k))
                k[i - 1] -= 1
            else:
                k[i - 1] += 1
            if not coeff or not self.in_support(tuple(k)):
                return {}
        return {tuple(k): coeff}


class PolynomialModule(WeightFamily):
    """P(n) = K[z_1..z_n] with x_i multiplying by z_i."""

    family: Literal["poly"] = "poly"

    def in_support(self, index: BasisIndex) -> bool:
        return all(k >= 0 for k in index)

    def rho_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        return r(self.n, i) ** k[i - 1]

    def sigma_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        return s(self.n, i) ** k[i - 1]

    def lowering(self, i: int, k: BasisIndex) -> RationalScalar:
        return quantum_integer(self.n, i, k[i - 1])


class VermaModule(WeightFamily):
    """V(lam, zeta); zeta holds the rho signs followed by the sigma signs."""

    family: Literal["verma"] = "verma"
    lam: list[Scalar]
    zeta: list[Sign]

    basis_symbol: ClassVar[str] = "v"

    @model_validator(mode="before")
    @classmethod
    def coerce_scalars(cls, data):
        return coerce_scalar_fields(data, "lam")

    @model_validator(mode="after")
    def check_parameters(self) -> "VermaModule":
        if len(self.lam) != self.n:
            raise ParameterCountError(f"verma module needs {self.n} lambda values, got {len(self.lam)}")
        if len(self.zeta) != 2 * self.n:
            raise ParameterCountError(f"verma module needs {2 * self.n} signs, got {len(self.zeta)}")
        if any(not value for value in self.lam):
            raise ModuleSpecError("lambda values must be nonzero")
        return self

    def in_support(self, index: BasisIndex) -> bool:
        return all(k >= 0 for k in index)

    def rho_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        return r(self.n, i) ** k[i - 1] * self.lam[i - 1] * self.zeta[i - 1]

    def sigma_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        return s(self.n, i) ** k[i - 1] * self.lam[i - 1] * self.zeta[self.n + i - 1]

    def lowering(self, i: int, k: BasisIndex) -> RationalScalar:
        return quantum_integer(self.n, i, k[i - 1]) * self.lam[i - 1] ** 2


class _OrbitFamily(WeightFamily):
    mu: list[Scalar]
    nu: list[Scalar]

    @model_validator(mode="before")
    @classmethod
    def coerce_scalars(cls, data):
        return coerce_scalar_fields(data, "mu", "nu")

    def _check_coordinates(self) -> None:
        if len(self.mu) != self.n or len(self.nu) != self.n:
            raise ParameterCountError(f"mu and nu need {self.n} entries each")
        if any(not value for value in self.mu + self.nu):
            raise ModuleSpecError("mu and nu entries must be nonzero")

    def rho_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        return r(self.n, i) ** k[i - 1] * self.mu[i - 1]

    def sigma_eigenvalue(self, i: int, k: BasisIndex) -> RationalScalar:
        return s(self.n, i) ** k[i - 1] * self.nu[i - 1]

    def lowering(self, i: int, k: BasisIndex) -> RationalScalar:
        ri, si = r(self.n, i), s(self.n, i)
        ki = k[i - 1]
        mu, nu = self.mu[i - 1], self.nu[i - 1]
        return (ri ** (2 * ki) * mu**2 - si ** (2 * ki) * nu**2) / (ri**2 - si**2)


class WeightModule(_OrbitFamily):
    """Z(mu, nu) on all of Z^n; only valid when the orbit has no breaks."""

    family: Literal["weight"] = "weight"

    @model_validator(mode="after")
    def check_parameters(self) -> "WeightModule":
        from .classify import IdealCoordinates, detect_breaks

        self._check_coordinates()
        report = detect_breaks(IdealCoordinates(n=self.n, mu=self.mu, nu=self.nu))
        if report.J:
            raise ModuleSpecError(
                f"the orbit of (mu, nu) has breaks at {report.J}; use the broken family"
            )
        return self

    def in_support(self, index: BasisIndex) -> bool:
        return True


class BrokenWeightModule(_OrbitFamily):
    """Z_{J,alpha}(mu, nu): for j in J, alpha_j = 0 keeps k_j <= p_j and alpha_j = 1 keeps k_j >= p_j + 1."""

    family: Literal["broken"] = "broken"
    J: list[int]
    alpha: list[Literal[0, 1]]

    _shifts: dict[int, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def check_parameters(self) -> "BrokenWeightModule":
        from .classify import IdealCoordinates, detect_breaks

        self._check_coordinates()
        report = detect_breaks(IdealCoordinates(n=self.n, mu=self.mu, nu=self.nu))
        if self.J != report.J:
            raise ModuleSpecError(
                f"break set must be {report.J} for these coordinates, got {self.J}"
            )
        if len(self.alpha) != len(self.J):
            raise ParameterCountError(f"alpha needs {len(self.J)} entries, got {len(self.alpha)}")
        self._shifts = {b.j: b.p for b in report.breaks}
        return self

    @property
    def shifts(self) -> dict[int, int]:
        return dict(self._shifts)

    def in_support(self, index: BasisIndex) -> bool:
        for j, a in zip(self.J, self.alpha):
            k, p = index[j - 1], self._shifts[j]
            if (a == 0 and k > p) or (a == 1 and k < p + 1):
                return False
        return True


class WhittakerModule(ModuleBase):
    """W(xi) = A (x)_{K[x]} K_xi with basis w(k, l), index (k_1..k_n, l_1..l_n)."""

    family: Literal["whittaker"] = "whittaker"
    xi: list[Scalar]

    basis_symbol: ClassVar[str] = "w"

    @model_validator(mode="before")
    @classmethod
    def coerce_scalars(cls, data):
        return coerce_scalar_fields(data, "xi")

    @model_validator(mode="after")
    def check_parameters(self) -> "WhittakerModule":
        if len(self.xi) != self.n:
            raise ParameterCountError(f"whittaker module needs {self.n} xi values, got {len(self.xi)}")
        if any(not value for value in self.xi):
            raise ModuleSpecError("xi values must be nonzero")
        return self

    def index_length(self) -> int:
        return 2 * self.n

    def in_support(self, index: BasisIndex) -> bool:
        return True

    def act_basis(self, letter: GeneratorSymbol, index: BasisIndex) -> dict[BasisIndex, RationalScalar]:
        n, i, e = self.n, letter.index, letter.exponent
        one = coefficient_field(n).one
        if letter.kind in TORUS:
            shifted = list(index)
            shifted[i - 1 if letter.kind == "rho" else n + i - 1] += e
            return {tuple(shifted): one}
        state = {tuple(index): one}
        for _ in range(e):
            nxt: dict[BasisIndex, RationalScalar] = {}
            for k, c in state.items():
                for k2, d in self._ladder_step(letter.kind, i, k).items():
                    accumulate(nxt, k2, c * d)
            state = nxt
        return state

    def _ladder_step(self, kind: str, i: int, index: BasisIndex) -> dict[BasisIndex, RationalScalar]:
        n = self.n
        ri, si = r(n, i), s(n, i)
        k, l = index[i - 1], index[n + i - 1]
        xi = self.xi[i - 1]
        if kind == "x":
            return {index: xi * ri ** (-k) * si ** (-l)}
        # y_i w = xi_i^{-1} t_i w, then move rho^k sigma^l past y_i
        denom = ri**2 - si**2
        scale = xi**-1 * ri**k * si**l
        up_rho = list(index)
        up_rho[i - 1] += 2
        up_sigma = list(index)
        up_sigma[n + i - 1] += 2
        out: dict[BasisIndex, RationalScalar] = {}
        accumulate(out, tuple(up_rho), scale * ri**2 / denom)
        accumulate(out, tuple(up_sigma), -scale * si**2 / denom)
        return out


ModuleSpec = Annotated[
    Union[PolynomialModule, VermaModule, WeightModule, BrokenWeightModule, WhittakerModule],
    Field(discriminator="family"),
]


def _require_support(spec: ModuleBase, v: ModuleVector) -> None:
    for k in v.terms:
        if len(k) != spec.index_length() or not spec.in_support(k):
            raise UnsupportedIndex(f"{spec.basis_symbol}{k} is not a basis vector of the {spec.label()} module")


def act_generator(spec: ModuleBase, g: GeneratorSymbol, v: ModuleVector) -> ModuleVector:
    """Apply one generator letter (any exponent for rho/sigma) to a vector."""
    check_letter(spec.n, g)
    _require_support(spec, v)
    return _act_letter(spec, g, v)


def _act_letter(spec: ModuleBase, g: GeneratorSymbol, v: ModuleVector) -> ModuleVector:
    out: dict[BasisIndex, RationalScalar] = {}
    for k, c in v.terms.items():
        for k2, d in spec.act_basis(g, k).items():
            if spec.in_support(k2):
                accumulate(out, k2, c * d)
    return ModuleVector(spec.n, out)


def act_word(spec: ModuleBase, word: Word, v: ModuleVector) -> ModuleVector:
    """g_1 ... g_m . v, applying g_m first."""
    _require_support(spec, v)
    for g in reversed(word):
        check_letter(spec.n, g)
        v = _act_letter(spec, g, v)
    return v


def act_element(spec: ModuleBase, e: AlgebraElement, v: ModuleVector) -> ModuleVector:
    """Action of an algebra element, one normal monomial at a time."""
    if e.n != spec.n:
        raise ModuleSpecError(f"element has rank {e.n}, module has rank {spec.n}")
    _require_support(spec, v)
    total = ModuleVector.zero(spec.n)
    for m, c in e:
        total = total + act_word(spec, word_of(m), v).scale(c)
    return total


def box_indices(spec: ModuleBase, radius: int) -> list[BasisIndex]:
    """All basis indices with every coordinate in -radius..radius, inside the support."""
    window = range(-radius, radius + 1)
    return [k for k in itertools.product(window, repeat=spec.index_length()) if spec.in_support(k)]


def check_module_relations(spec: ModuleBase, radius: int) -> CheckReport:
    """Every presentation relation as an operator identity on each basis vector of the box."""
    report = CheckReport(suite=f"module relations ({spec.label()})", n=spec.n)
    relations = presentation_relations(spec.n)
    for k in box_indices(spec, radius):
        v = ModuleVector.basis(spec.n, k)
        for rel in relations:
            lhs = _act_side(spec, rel.lhs, v)
            rhs = _act_side(spec, rel.rhs, v)
            diff = lhs - rhs
            report.record(
                rel.name,
                diff.text(spec.basis_symbol) if diff else None,
                f"{spec.basis_symbol}{k}",
            )
    return report


def _act_side(spec: ModuleBase, side, v: ModuleVector) -> ModuleVector:
    total = ModuleVector.zero(spec.n)
    for c, word in side:
        total = total + act_word(spec, word, v).scale(c)
    return total


def generator_letters(n: int) -> list[GeneratorSymbol]:
    letters = []
    for i in range(1, n + 1):
        for kind in TORUS:
            letters.append(GeneratorSymbol(kind, i, 1))
            letters.append(GeneratorSymbol(kind, i, -1))
        for kind in LADDER:
            letters.append(GeneratorSymbol(kind, i, 1))
    return letters


class CyclicityReport(BaseModel):
    family: str
    start: list[int]
    radius: int
    reached: int
    box_size: int
    missing: list[list[int]]

    @computed_field
    @property
    def complete(self) -> bool:
        return self.reached == self.box_size


def cyclicity_probe(spec: ModuleBase, start: Sequence[int], radius: int) -> CyclicityReport:
    """Breadth-first search over basis indices reachable from start inside the box."""
    start = tuple(start)
    if len(start) != spec.index_length() or not spec.in_support(start):
        raise UnsupportedIndex(f"start {start} is not in the support of the {spec.label()} module")
    box = set(box_indices(spec, radius))
    letters = generator_letters(spec.n)
    seen = {start}
    queue = deque([start])
    while queue:
        k = queue.popleft()
        for g in letters:
            for k2, c in spec.act_basis(g, k).items():
                if c and k2 in box and k2 not in seen:
                    seen.add(k2)
                    queue.append(k2)
    reached = seen & box
    return CyclicityReport(
        family=spec.label(),
        start=list(start),
        radius=radius,
        reached=len(reached),
        box_size=len(box),
        missing=[list(k) for k in sorted(box - seen)],
    )


def joint_eigenvalues(spec: ModuleBase, index: Sequence[int]) -> tuple[RationalScalar, ...]:
    """(rho_1..rho_n, sigma_1..sigma_n) eigenvalues on a weight basis vector."""
    if not isinstance(spec, WeightFamily):
        raise ModuleSpecError(f"the {spec.label()} module is not a weight module")
    index = tuple(index)
    if not spec.in_support(index):
        raise UnsupportedIndex(f"{index} is outside the support")
    rho = [spec.rho_eigenvalue(i, index) for i in range(1, spec.n + 1)]
    sigma = [spec.sigma_eigenvalue(i, index) for i in range(1, spec.n + 1)]
    return tuple(rho + sigma)


def weight_separation_check(spec: ModuleBase, radius: int) -> CheckReport:
    """Distinct basis indices in the box must carry distinct joint eigenvalues."""
    report = CheckReport(suite=f"weight separation ({spec.label()})", n=spec.n)
    owner: dict[tuple, BasisIndex] = {}
    for k in box_indices(spec, radius):
        weight = joint_eigenvalues(spec, k)
        clash = owner.get(weight)
        report.record(
            "distinct weights",
            f"same weight as {spec.basis_symbol}{clash}" if clash is not None else None,
            f"{spec.basis_symbol}{k}",
        )
        owner.setdefault(weight, k)
    return report


def verma_weight_iso_check(lam: Sequence[RationalScalar], zeta: Sequence[int], radius: int = 3) -> CheckReport:
    """Compare V(lam, zeta) with Z_{J,1}(lam zeta, lam zeta') index by index on the box."""
    n = len(lam)
    verma = VermaModule(n=n, lam=list(lam), zeta=list(zeta))
    mu = [verma.lam[i] * zeta[i] for i in range(n)]
    nu = [verma.lam[i] * zeta[n + i] for i in range(n)]
    weight = BrokenWeightModule(n=n, mu=mu, nu=nu, J=list(range(1, n + 1)), alpha=[1] * n)
    report = CheckReport(suite="verma vs broken weight", n=n)
    for k in box_indices(verma, radius):
        if not weight.in_support(k):
            report.record("same support", "missing from the weight module", f"v{k}")
            continue
        v = ModuleVector.basis(n, k)
        for g in generator_letters(n):
            diff = act_generator(verma, g, v) - act_generator(weight, g, v)
            report.record(g.text(), diff.text("v") if diff else None, f"v{k}")
    for k in box_indices(weight, radius):
        if not verma.in_support(k):
            report.record("same support", "missing from the verma module", f"z{k}")
    return report
