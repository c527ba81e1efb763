"""CLI entry point for mpweyl."""

import json

import click
from pydantic import ValidationError
from rich.console import Console

from .algebra import element_payload, element_text
from .classify import IdealCoordinates, classification_payload, detect_breaks, quiver_dot, skeleton
from .config import OUTPUT_FORMATS, Config
from .errors import InvalidParameter, MpWeylError
from .expression import evaluate, format_expression, is_scalar, parse, parse_element, parse_scalar_list
from .modules import (
    BrokenWeightModule,
    ModuleBase,
    ModuleVector,
    PolynomialModule,
    VermaModule,
    WeightModule,
    WhittakerModule,
    act_element,
)
from .pipeline import Pipeline, VerifyContext
from .steps import (
    ClassificationStep,
    GwaOracleStep,
    ModuleRelationsStep,
    PresentationStep,
    UqrsStep,
    WhittakerStep,
)

console = Console(stderr=True)


class CommandGroup(click.Group):
    """Map library errors to a JSON error object and exit code 1 (domain) or 2 (usage)."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ValidationError as e:
            self.report(ctx, invalid_parameter(e))
        except MpWeylError as e:
            self.report(ctx, e)

    def report(self, ctx: click.Context, e: MpWeylError):
        click.echo(json.dumps({"error": e.payload()}, indent=2))
        console.print(f"[bold red]Error:[/bold red] {e}")
        ctx.exit(2 if e.usage else 1)


def invalid_parameter(e: ValidationError) -> InvalidParameter:
    """Collapse pydantic validation errors into one usage error."""
    problems = [
        f"{'.'.join(str(part) for part in err['loc']) or e.title}: {err['msg']}" for err in e.errors()
    ]
    return InvalidParameter("; ".join(problems))


def emit(ctx: click.Context, payload: dict, text: str) -> None:
    """Write the result to stdout in the configured format."""
    config: Config = ctx.obj
    if config.output_format == "json":
        click.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        click.echo(text)


def int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}") from None


rank_option = click.option(
    "-n", "n", type=click.IntRange(min=1), required=True, help="Number of index pairs (rank n)"
)


@click.group(cls=CommandGroup)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(OUTPUT_FORMATS),
    default=None,
    help="Output format (overrides MPWEYL_FORMAT)",
)
@click.version_option(package_name="mpweyl")
@click.pass_context
def main(ctx: click.Context, output_format: str | None):
    """
    Exact computations in the multiparameter Weyl algebra A_{r,s}(n).

    \b
    Examples:
       mpweyl normalize -n 1 "y1*x1"
       mpweyl classify -n 1 --mu 1 --nu 1
       mpweyl skeleton -J 1,3 --dot
    """
    config = Config.from_env()
    if output_format:
        config = config.model_copy(update={"output_format": output_format})
    ctx.obj = config


@main.command()
@rank_option
@click.argument("expr")
@click.pass_context
def normalize(ctx: click.Context, n: int, expr: str):
    """Normal form of an expression in the algebra."""
    e = parse_element(expr, n)
    emit(ctx, element_payload(e), element_text(e))


def build_module(
    n: int,
    family: str,
    lam: str | None,
    zeta: str | None,
    mu: str | None,
    nu: str | None,
    alpha: str | None,
    xi: str | None,
) -> ModuleBase:
    def required(name: str, value: str | None) -> str:
        if value is None:
            raise InvalidParameter(f"the {family} module needs --{name}")
        return value

    if family == "poly":
        return PolynomialModule(n=n)
    if family == "verma":
        return VermaModule(
            n=n,
            lam=parse_scalar_list(required("lam", lam), n),
            zeta=int_list(required("zeta", zeta)),
        )
    if family == "whittaker":
        return WhittakerModule(n=n, xi=parse_scalar_list(required("xi", xi), n))
    mu_values = parse_scalar_list(required("mu", mu), n)
    nu_values = parse_scalar_list(required("nu", nu), n)
    if alpha is None:
        return WeightModule(n=n, mu=mu_values, nu=nu_values)
    report = detect_breaks(IdealCoordinates(n=n, mu=mu_values, nu=nu_values))
    return BrokenWeightModule(n=n, mu=mu_values, nu=nu_values, J=report.J, alpha=int_list(alpha))


@main.command()
@rank_option
@click.option(
    "--module",
    "family",
    type=click.Choice(["poly", "verma", "weight", "whittaker"]),
    required=True,
    help="Module family",
)
@click.option("--lam", help="Verma lambda values, comma-separated scalars")
@click.option("--zeta", help="Verma signs: n rho signs then n sigma signs")
@click.option("--mu", help="Weight module mu coordinates")
@click.option("--nu", help="Weight module nu coordinates")
@click.option("--alpha", help="Class of a broken orbit, one 0/1 per break")
@click.option("--xi", help="Whittaker type, comma-separated scalars")
@click.option("--vector", required=True, help="Basis index, comma-separated integers")
@click.argument("expr")
@click.pass_context
def act(
    ctx: click.Context,
    n: int,
    family: str,
    lam: str | None,
    zeta: str | None,
    mu: str | None,
    nu: str | None,
    alpha: str | None,
    xi: str | None,
    vector: str,
    expr: str,
):
    """Apply an algebra element to a basis vector of a module."""
    spec = build_module(n, family, lam, zeta, mu, nu, alpha, xi)
    e = parse_element(expr, n)
    result = act_element(spec, e, ModuleVector.basis(n, int_list(vector)))
    payload = {"module": spec.label(), **result.payload()}
    emit(ctx, payload, result.text(spec.basis_symbol))


@main.command()
@rank_option
@click.option("--mu", required=True, help="mu coordinates, comma-separated scalars")
@click.option("--nu", required=True, help="nu coordinates, comma-separated scalars")
@click.pass_context
def classify(ctx: click.Context, n: int, mu: str, nu: str):
    """Breaks and simple weight modules of the orbit through (mu, nu)."""
    coords = IdealCoordinates(n=n, mu=parse_scalar_list(mu, n), nu=parse_scalar_list(nu, n))
    payload = classification_payload(detect_breaks(coords))
    lines = [f"J = {payload['J']}", f"simples: {payload['simple_count']}"]
    lines += [
        f"  alpha={s['alpha']} {' and '.join(s['support']) or 'all k'}" for s in payload["simples"]
    ]
    emit(ctx, payload, "\n".join(lines))


@main.command(name="skeleton")
@click.option("-J", "breaks", default="", help="Break set, comma-separated indices")
@click.option("--dot/--json", "as_dot", default=False, help="Graphviz DOT or JSON output")
@click.pass_context
def skeleton_command(ctx: click.Context, breaks: str, as_dot: bool):
    """The quiver algebra of an orbit with the given break set."""
    J = int_list(breaks)
    if any(j < 1 for j in J):
        raise click.BadParameter(f"break indices must be positive, got {breaks!r}")
    if as_dot:
        click.echo(quiver_dot(J))
        return
    presentation = skeleton(J)
    emit(ctx, presentation.model_dump(), presentation.dot())


def run_pipeline(ctx: click.Context, steps: list, verify_ctx: VerifyContext) -> None:
    console.print("[bold]mpweyl verification[/bold]")
    result = Pipeline(steps, console).run(verify_ctx)
    payload = {
        "n": result.n,
        "ok": result.ok,
        "reports": [report.model_dump() for report in result.reports],
    }
    emit(ctx, payload, "\n".join(report.summary() for report in result.reports))
    if result.ok:
        console.print("\n[bold green]Done![/bold green]")
    else:
        console.print("\n[bold red]Nonzero residuals found[/bold red]")
        ctx.exit(1)


@main.command()
@rank_option
@click.option("--xi", help="Whittaker type, comma-separated scalars (default r_i + s_i)")
@click.option("--box", type=click.IntRange(min=0), default=2, show_default=True, help="Box radius")
@click.pass_context
def whittaker(ctx: click.Context, n: int, xi: str | None, box: int):
    """Relations and cyclicity of a Whittaker module."""
    verify_ctx = VerifyContext(
        config=ctx.obj,
        n=n,
        xi=parse_scalar_list(xi, n) if xi else None,
        whittaker_box=box,
    )
    run_pipeline(ctx, [WhittakerStep()], verify_ctx)


@main.command()
@rank_option
@click.option("--box", type=click.IntRange(min=0), help="Box radius (overrides MPWEYL_BOX)")
@click.option("--samples", type=click.IntRange(min=1), help="Random samples (overrides MPWEYL_SAMPLES)")
@click.option("--seed", type=int, help="Random seed (overrides MPWEYL_SEED)")
@click.pass_context
def verify(ctx: click.Context, n: int, box: int | None, samples: int | None, seed: int | None):
    """Presentation, GWA, module relation and classification suites."""
    updates = {"box_radius": box, "samples": samples, "seed": seed}
    config = ctx.obj.model_copy(update={k: v for k, v in updates.items() if v is not None})
    steps = [
        PresentationStep(),
        GwaOracleStep(),
        ModuleRelationsStep(),
        ClassificationStep(),
        WhittakerStep(),
    ]
    run_pipeline(ctx, steps, VerifyContext(config=config, n=n))


@main.command(name="uqrs-verify")
@rank_option
@click.option("--degree", type=click.IntRange(min=0), default=4, show_default=True, help="Largest graded degree")
@click.pass_context
def uqrs_verify(ctx: click.Context, n: int, degree: int):
    """Relations of U_{r,s}(sl_n) and its action on P(n)."""
    if n < 2:
        raise click.BadParameter("U_(r,s)(sl_n) needs n >= 2", param_hint="-n")
    run_pipeline(ctx, [UqrsStep()], VerifyContext(config=ctx.obj, n=n, degree=degree))


@main.command(name="parse-check")
@rank_option
@click.argument("expr")
@click.pass_context
def parse_check(ctx: click.Context, n: int, expr: str):
    """Parse an expression, print it back and confirm the round trip."""
    tree = parse(expr, n)
    formatted = format_expression(tree)
    round_trip = parse(formatted, n) == tree
    value = evaluate(tree, n, expr)
    payload = {
        "formatted": formatted,
        "scalar": is_scalar(tree),
        "round_trip": round_trip,
        "value": element_text(value),
    }
    emit(ctx, payload, formatted)
    if not round_trip:
        ctx.exit(1)


if __name__ == "__main__":
    main()
