"""Presentation step for pipeline."""

from ..algebra import verify_presentation
from ..pipeline import VerifyContext
from ..rewriting import associativity_check, confluence_check


class PresentationStep:
    """Defining relations, down-up identities, confluence and associativity."""

    name = "Presentation"

    def run(self, ctx: VerifyContext) -> VerifyContext:
        samples = ctx.config.samples
        ctx.reports.append(verify_presentation(ctx.n))
        ctx.reports.append(confluence_check(ctx.n, samples, ctx.rng))
        ctx.reports.append(associativity_check(ctx.n, samples, ctx.rng))
        return ctx
