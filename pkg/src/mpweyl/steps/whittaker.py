"""Whittaker step for pipeline."""

from rich.console import Console

from ..modules import WhittakerModule, check_module_relations, cyclicity_probe
from ..pipeline import VerifyContext
from ..reports import CheckReport
from ..scalars import r, s

console = Console(stderr=True)


class WhittakerStep:
    """Relations and cyclicity of the Whittaker module of type xi."""

    name = "Whittaker"

    def run(self, ctx: VerifyContext) -> VerifyContext:
        n = ctx.n
        xi = ctx.xi or [r(n, i) + s(n, i) for i in range(1, n + 1)]
        spec = WhittakerModule(n=n, xi=xi)

        ctx.reports.append(check_module_relations(spec, ctx.whittaker_box))

        probe = cyclicity_probe(spec, [0] * (2 * n), ctx.whittaker_box)
        report = CheckReport(suite="whittaker cyclicity", n=n)
        report.record(
            "w(0,0) generates the box",
            None if probe.complete else f"{probe.box_size - probe.reached} indices unreached",
        )
        console.print(f"[dim]reached {probe.reached}/{probe.box_size} basis vectors[/dim]")
        ctx.reports.append(report)
        return ctx
