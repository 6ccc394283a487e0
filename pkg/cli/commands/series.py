from typing import Optional
import typer
from cli import render
from cli.deps import get_config, guarded, parse_spec
from schemas.report import CheckRequest
from schemas.series import SeriesOut
from services.harness.formulas import plan_identity
from services.harness.statistics import StatisticMarks, class_statistic_series
from models.series import poly_ring
from core.config import settings

app = typer.Typer(help="Build truncated q-series.")


@app.command("class")
def class_series(
        ctx: typer.Context,
        spec: str = typer.Argument(..., help="Class: all, sc, pz:Z, bgt:T, bgzt:Z,T"),
        order: Optional[int] = typer.Option(None, "--order", "-N"),
        y_hook: Optional[int] = typer.Option(None, "--y-hook", help="Mark hooks of this length with y"),
        degree_cap: Optional[int] = typer.Option(None, "--degree-cap", "-D"),
):
    """Sum of q^|p| over the class, optionally with y^(number of hooks equal to --y-hook)."""
    config = get_config(ctx).merged(order=order, degree_cap=degree_cap)
    parsed = parse_spec(spec)
    params = {"order": config.series_order}

    def run():
        if y_hook is None:
            return class_statistic_series(parsed, 1, config.series_order)
        cap = settings.Y_DEGREE_CAP if config.degree_cap is None else config.degree_cap
        params.update(y_hook=y_hook, degree_cap=cap)
        marks = StatisticMarks(ring=poly_ring("y", cap), y_hook=y_hook)
        return class_statistic_series(parsed, y_hook, config.series_order, marks)

    s = guarded(run)
    render.series(SeriesOut.build(str(parsed), s, params), config.format)


@app.command("rhs")
def rhs_series(
        ctx: typer.Context,
        identity_id: str = typer.Argument(...),
        t: Optional[int] = typer.Option(None, "--t", "-t"),
        z: Optional[int] = typer.Option(None, "--z", "-z"),
        k: int = typer.Option(1, "--k"),
        beta: Optional[int] = typer.Option(None, "--beta"),
        rho: Optional[str] = typer.Option(None, "--rho"),
        rho1: Optional[str] = typer.Option(None, "--rho1"),
        rho2: Optional[str] = typer.Option(None, "--rho2"),
        seed: Optional[int] = typer.Option(None, "--seed"),
        form: Optional[str] = typer.Option(None, "--form"),
        order: Optional[int] = typer.Option(None, "--order", "-N"),
        degree_cap: Optional[int] = typer.Option(None, "--degree-cap", "-D"),
        closed_forms: bool = typer.Option(False, "--closed-forms"),
):
    """Product side of a catalog identity."""
    config = get_config(ctx).merged(order=order, degree_cap=degree_cap)

    def run():
        request = CheckRequest(
            t=t, z=z, k=k, beta=beta, rho=rho, rho1=rho1, rho2=rho2, seed=seed, form=form,
            order=config.order, degree_cap=config.degree_cap, closed_forms=closed_forms,
        )
        plan = plan_identity(identity_id, request)
        return plan, plan.rhs()

    plan, s = guarded(run)
    render.series(SeriesOut.build(identity_id, s, plan.params), config.format)
