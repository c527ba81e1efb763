"""Module relations step for pipeline."""

import itertools

from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TaskProgressColumn, TextColumn

from ..modules import (
    BrokenWeightModule,
    ModuleBase,
    PolynomialModule,
    VermaModule,
    WeightModule,
    check_module_relations,
    verma_weight_iso_check,
    weight_separation_check,
)
from ..pipeline import VerifyContext
from ..reports import merge
from ..scalars import coefficient_field, r, s

console = Console(stderr=True)


def sign_patterns(n: int) -> list[list[int]]:
    """Every zeta for n = 1; all-plus and alternating signs otherwise."""
    if n == 1:
        return [list(z) for z in itertools.product((1, -1), repeat=2)]
    return [[1] * (2 * n), [(-1) ** k for k in range(2 * n)]]


def sample_modules(n: int) -> list[ModuleBase]:
    """Representatives of the weight families at rank n with generic parameters."""
    one = coefficient_field(n).one
    idx = range(1, n + 1)
    lam = [r(n, i) + s(n, i) for i in idx]
    modules: list[ModuleBase] = [PolynomialModule(n=n)]
    modules += [VermaModule(n=n, lam=lam, zeta=zeta) for zeta in sign_patterns(n)]
    modules.append(WeightModule(n=n, mu=[r(n, i) for i in idx], nu=[s(n, i) ** 2 for i in idx]))
    planted = [(r(n, i) / s(n, i)) ** i for i in idx]
    for alpha in itertools.product((0, 1), repeat=n):
        modules.append(
            BrokenWeightModule(n=n, mu=[one] * n, nu=planted, J=list(idx), alpha=list(alpha))
        )
    return modules


class ModuleRelationsStep:
    """Check every presentation relation on a box of each weight family."""

    name = "Module relations"

    def run(self, ctx: VerifyContext) -> VerifyContext:
        n, radius = ctx.n, ctx.config.box_radius
        modules = sample_modules(n)
        relations, separation = [], []

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            TaskProgressColumn(),
            console=console,
        ) as progress:
            task = progress.add_task("Checking module relations", total=len(modules))

            for spec in modules:
                relations.append(check_module_relations(spec, radius))
                if spec.family in ("poly", "weight"):
                    separation.append(weight_separation_check(spec, radius))
                progress.update(task, advance=1)

        ctx.reports.append(merge(relations, suite="module relations"))
        ctx.reports.append(merge(separation, suite="weight separation"))

        lam = [r(n, i) + s(n, i) for i in range(1, n + 1)]
        ctx.reports.append(
            merge(
                (verma_weight_iso_check(lam, zeta, radius) for zeta in sign_patterns(n)),
                suite="verma vs broken weight",
            )
        )
        return ctx
