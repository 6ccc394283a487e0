from typing import Optional
import typer
from cli import render
from cli.deps import get_config, guarded
from schemas.report import CheckRequest
from services.harness.catalog import default_catalog, run_catalog, run_check


def verify_command(
        ctx: typer.Context,
        check_id: str = typer.Argument(..., help="Catalog id, or 'all' for the curated run"),
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
        n_max: Optional[int] = typer.Option(None, "--n-max"),
        degree_cap: Optional[int] = typer.Option(None, "--degree-cap", "-D"),
        closed_forms: bool = typer.Option(False, "--closed-forms"),
        quick: bool = typer.Option(False, "--quick", help="With 'all': smaller orders and ranges"),
        jobs: Optional[int] = typer.Option(None, "--jobs", "-j"),
):
    """Run a catalog check; exit code 0 if everything passes, 1 otherwise."""
    config = get_config(ctx).merged(order=order, n_max=n_max, degree_cap=degree_cap)
    workers = config.jobs if jobs is None else jobs

    def run():
        if check_id == "all":
            return run_catalog(
                default_catalog(quick=quick, closed_forms=closed_forms, order=config.order, n_max=config.n_max),
                workers,
            )
        request = CheckRequest(
            t=t, z=z, k=k, beta=beta, rho=rho, rho1=rho1, rho2=rho2, seed=seed, form=form,
            order=config.order, n_max=config.n_max, degree_cap=config.degree_cap,
            closed_forms=closed_forms,
        )
        return [run_check(check_id, request.echo())]

    results = guarded(run)
    render.reports(results, config.format)
    raise typer.Exit(code=0 if all(r.passed for r in results) else 1)
