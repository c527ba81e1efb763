"""Quantum group step for pipeline."""

from rich.console import Console

from ..pipeline import VerifyContext
from ..reports import merge
from ..uqrs import (
    graded_component_check,
    homomorphism_check,
    u_weight_separation_check,
    verify_u_relations,
)

console = Console(stderr=True)


class UqrsStep:
    """Relations of U_{r,s}(sl_n) in the algebra and its action on P(n)."""

    name = "Quantum group"

    def run(self, ctx: VerifyContext) -> VerifyContext:
        n = ctx.n
        if n < 2:
            console.print("[yellow]U_(r,s)(sl_n) needs n >= 2, skipped[/yellow]")
            return ctx

        ctx.reports.append(verify_u_relations(n))
        ctx.reports.append(
            merge(
                (graded_component_check(m, n) for m in range(ctx.degree + 1)),
                suite="graded components",
            )
        )
        ctx.reports.append(u_weight_separation_check(n, ctx.config.box_radius))
        ctx.reports.append(
            homomorphism_check(n, ctx.config.box_radius, ctx.config.samples, ctx.rng)
        )
        return ctx
