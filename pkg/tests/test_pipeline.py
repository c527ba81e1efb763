import io

import pytest
from rich.console import Console

from mpweyl.config import Config
from mpweyl.modules import BrokenWeightModule
from mpweyl.pipeline import Pipeline, VerifyContext
from mpweyl.reports import CheckReport, merge
from mpweyl.steps import ClassificationStep, GwaOracleStep, PresentationStep, UqrsStep
from mpweyl.steps.module_relations import sample_modules, sign_patterns


def quiet() -> Console:
    return Console(file=io.StringIO(), width=120)


class Recording:
    name = "Recording"

    def __init__(self, ok: bool = True):
        self.ok = ok

    def run(self, ctx: VerifyContext) -> VerifyContext:
        report = CheckReport(suite="recording", n=ctx.n)
        report.record("always", None if self.ok else "1")
        ctx.reports.append(report)
        return ctx


class Failing:
    name = "Failing"

    def run(self, ctx: VerifyContext) -> VerifyContext:
        raise RuntimeError("boom")


def context(n: int = 1, **config) -> VerifyContext:
    return VerifyContext(config=Config(**config), n=n)


class TestReports:
    def test_record(self):
        report = CheckReport(suite="s", n=1)
        report.record("a", None)
        report.record("b", "r1", "z(0)")
        assert report.checked == 2
        assert not report.ok
        assert report.residuals[0].location == "z(0)"
        assert report.summary() == "s (n=1): 2 checks, 1 nonzero residuals"

    def test_merge(self):
        a, b = CheckReport(suite="s", n=2), CheckReport(suite="s", n=2)
        a.record("x", None)
        b.record("y", "1")
        b.record_specialized("z", "r1 - r2")
        merged = merge([a, b], suite="both")
        assert (merged.suite, merged.checked, len(merged.residuals)) == ("both", 3, 1)
        assert [item.relation for item in merged.specialized_only] == ["z"]
        assert merge([b, a]).checked == merged.checked

    def test_merge_needs_input(self):
        with pytest.raises(ValueError):
            merge([])

    def test_specialized_only_does_not_fail(self):
        report = CheckReport(suite="s", n=2)
        report.record_specialized("[e1,f1]", "r1 - r2")
        assert report.ok
        assert report.checked == 1
        assert report.summary() == "s (n=2): 1 checks, ok, 1 zero only under uniform parameters"

    def test_ok_is_serialized(self):
        assert CheckReport(suite="s", n=1).model_dump()["ok"] is True


class TestPipeline:
    def test_runs_steps_in_order(self):
        ctx = Pipeline([Recording(), Recording(ok=False)], quiet()).run(context())
        assert [report.ok for report in ctx.reports] == [True, False]
        assert not ctx.ok

    def test_prints_step_headers(self):
        console = quiet()
        Pipeline([Recording()], console).run(context())
        output = console.file.getvalue()
        assert "Step 1/1: Recording" in output
        assert "recording (n=1): 1 checks, ok" in output

    def test_reraises(self):
        console = quiet()
        with pytest.raises(RuntimeError):
            Pipeline([Recording(), Failing()], console).run(context())
        assert "Error in Failing" in console.file.getvalue()

    def test_rng_follows_seed(self):
        a, b = context(seed=7), context(seed=7)
        assert a.rng.random() == b.rng.random()
        assert a.rng is a.rng


class TestSteps:
    def test_sign_patterns(self):
        assert len(sign_patterns(1)) == 4
        assert sign_patterns(2) == [[1, 1, 1, 1], [1, -1, 1, -1]]

    def test_sample_modules(self):
        modules = sample_modules(2)
        families = [spec.family for spec in modules]
        assert families.count("poly") == 1
        assert families.count("verma") == 2
        broken = [spec for spec in modules if isinstance(spec, BrokenWeightModule)]
        assert sorted(tuple(spec.alpha) for spec in broken) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_presentation(self):
        ctx = PresentationStep().run(context(samples=3))
        assert ctx.ok
        assert len(ctx.reports) == 3

    def test_gwa_oracle(self):
        ctx = GwaOracleStep().run(context(n=2, samples=5))
        assert ctx.ok

    def test_classification(self):
        ctx = ClassificationStep().run(context(n=2, box_radius=1))
        assert ctx.ok
        assert {report.suite for report in ctx.reports} >= {"skeleton"}

    def test_uqrs_skips_rank_one(self):
        ctx = VerifyContext(config=Config(), n=1)
        assert UqrsStep().run(ctx).reports == []
