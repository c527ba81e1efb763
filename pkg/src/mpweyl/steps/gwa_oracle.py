"""GWA oracle step for pipeline."""

from ..gwa import cross_engine_check, verify_gwa_relations
from ..pipeline import VerifyContext


class GwaOracleStep:
    """Check the generalized Weyl algebra relations and compare both multiplication engines."""

    name = "GWA oracle"

    def run(self, ctx: VerifyContext) -> VerifyContext:
        ctx.reports.append(verify_gwa_relations(ctx.n))
        ctx.reports.append(cross_engine_check(ctx.n, ctx.config.samples, ctx.rng))
        return ctx
