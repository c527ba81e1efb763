"""Pipeline execution framework for the verification suites."""

import random
from typing import Protocol

from pydantic import BaseModel, ConfigDict, PrivateAttr
from rich.console import Console

from .config import Config
from .reports import CheckReport
from .scalars import Scalar


class VerifyContext(BaseModel):
    """Context passed between verification steps."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    config: Config
    n: int

    # Whittaker type, its box and the graded degree bound
    xi: list[Scalar] | None = None
    whittaker_box: int = 2
    degree: int = 4

    # Collected results
    reports: list[CheckReport] = []

    _rng: random.Random | None = PrivateAttr(default=None)

    @property
    def rng(self) -> random.Random:
        if self._rng is None:
            self._rng = random.Random(self.config.seed)
        return self._rng

    @property
    def ok(self) -> bool:
        return all(report.ok for report in self.reports)


class Step(Protocol):
    """Pipeline step interface."""

    name: str

    def run(self, ctx: VerifyContext) -> VerifyContext:
        """Execute step and return updated context."""
        ...


class Pipeline:
    """Execute a sequence of steps."""

    def __init__(self, steps: list[Step], console: Console | None = None):
        self.steps = steps
        self.console = console or Console(stderr=True)

    def run(self, ctx: VerifyContext) -> VerifyContext:
        """Run all steps in sequence."""
        total = len(self.steps)

        for i, step in enumerate(self.steps, 1):
            self.console.print(f"\n[bold]Step {i}/{total}: {step.name}[/bold]")
            before = len(ctx.reports)
            try:
                ctx = step.run(ctx)
            except Exception as e:
                self.console.print(f"[bold red]Error in {step.name}:[/bold red] {e}")
                raise
            for report in ctx.reports[before:]:
                style = "green" if report.ok else "bold red"
                self.console.print(f"[{style}]{report.summary()}[/{style}]")

        return ctx
