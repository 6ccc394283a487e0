import logging
from typing import Optional
import typer
from core.config import settings
from cli.commands import partitions, series, serve, verify
from cli.deps import CommandConfig, OutputFormat

# Configure logging
logging.basicConfig(
    level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger(__name__)

app = typer.Typer(
    name=settings.PROJECT_NAME,
    help="Exact hook length combinatorics: Littlewood decompositions, partition classes and q-series checks.",
    no_args_is_help=True,
)


@app.callback()
def main(
        ctx: typer.Context,
        output: OutputFormat = typer.Option(OutputFormat.HUMAN, "--format", "-f", help="human, json or tsv"),
        order: Optional[int] = typer.Option(None, "--order", min=0, help="Truncation order N"),
        n_max: Optional[int] = typer.Option(None, "--n-max", min=0, help="Bound for congruence scans"),
        degree_cap: Optional[int] = typer.Option(None, "--degree-cap", min=0, help="Degree cap for y, x or u"),
        jobs: int = typer.Option(settings.JOBS, "--jobs", min=1, help="Worker processes for catalog runs"),
):
    ctx.obj = CommandConfig(format=output, order=order, n_max=n_max, degree_cap=degree_cap, jobs=jobs)


app.command("decompose")(partitions.decompose_command)
app.command("classify")(partitions.classify_command)
app.command("enumerate")(partitions.enumerate_command)
app.add_typer(series.app, name="series")
app.command("verify")(verify.verify_command)
app.command("serve")(serve.serve_command)


if __name__ == "__main__":
    app()
