"""Classification step for pipeline."""

from ..classify import QuiverAlgebra, planted_breaks_check, quiver_simples
from ..pipeline import VerifyContext
from ..reports import CheckReport


class ClassificationStep:
    """Planted breaks, support partitions and the skeleton quiver algebras."""

    name = "Classification"

    def run(self, ctx: VerifyContext) -> VerifyContext:
        ctx.reports.append(planted_breaks_check(ctx.n, ctx.config.box_radius))

        report = CheckReport(suite="skeleton", n=ctx.n)
        for q in range(1, min(ctx.n, 3) + 1):
            partial = QuiverAlgebra(q).verify()
            report.checked += partial.checked
            report.residuals.extend(partial.residuals)
            count = len(quiver_simples(q))
            report.record(
                f"simple count q={q}",
                None if count == 2**q else f"{count} instead of {2**q}",
            )
        ctx.reports.append(report)
        return ctx
