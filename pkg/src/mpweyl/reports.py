"""Result records shared by every verification routine."""

from collections.abc import Iterable

from pydantic import BaseModel, computed_field


class Residual(BaseModel):
    """A relation that did not reduce to zero."""

    relation: str
    location: str | None = None
    value: str


class CheckReport(BaseModel):
    """Outcome of one verification suite.

    ``specialized_only`` holds relations whose residual is nonzero in the
    generic field but vanishes once r_i = r_1 and s_i = s_1. They do not
    make the report fail, and they are never counted as zero.
    """

    suite: str
    n: int
    checked: int = 0
    residuals: list[Residual] = []
    specialized_only: list[Residual] = []

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.residuals

    def record(self, relation: str, value: str | None, location: str | None = None) -> None:
        """Count one check; keep its residual when value is not None."""
        self.checked += 1
        if value is not None:
            self.residuals.append(Residual(relation=relation, location=location, value=value))

    def record_specialized(self, relation: str, value: str, location: str | None = None) -> None:
        """Count one check whose generic residual only vanishes under uniform parameters."""
        self.checked += 1
        self.specialized_only.append(Residual(relation=relation, location=location, value=value))

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.residuals)} nonzero residuals"
        if self.specialized_only:
            status += f", {len(self.specialized_only)} zero only under uniform parameters"
        return f"{self.suite} (n={self.n}): {self.checked} checks, {status}"


def merge(reports: Iterable[CheckReport], suite: str | None = None) -> CheckReport:
    """Combine partial reports of one suite; the order of inputs does not matter for ok/checked."""
    reports = list(reports)
    if not reports:
        raise ValueError("merge needs at least one report")
    merged = CheckReport(suite=suite or reports[0].suite, n=reports[0].n)
    for report in reports:
        merged.checked += report.checked
        merged.residuals.extend(report.residuals)
        merged.specialized_only.extend(report.specialized_only)
    return merged
