from typing import List, Optional
import typer
from cli import render
from cli.deps import check_modulus, get_config, guarded, parse_partition, parse_spec
from models.boundary_word import encode_word
from schemas.partition import ClassificationOut, DecompositionOut, EnumerationOut, Membership
from services.classes import contains, enumerate_class
from services.littlewood import decompose, enumerate_t_cores, kappa


def decompose_command(
        ctx: typer.Context,
        partition: str = typer.Option("", "--partition", "-p", help="Comma separated parts; empty for ()"),
        t: int = typer.Option(..., "--t", "-t", help="Modulus"),
):
    """Print the t-core, t-quotient, boundary word and core vector."""
    config = get_config(ctx)
    p = parse_partition(partition)
    check_modulus(t)

    def run() -> DecompositionOut:
        d = decompose(p, t)
        return DecompositionOut.build(p, d, encode_word(p), kappa(d.core, t))

    render.decomposition(guarded(run), config.format)


def classify_command(
        ctx: typer.Context,
        specs: List[str] = typer.Argument(..., help="Classes: all, sc, pz:Z, bgt:T, bgzt:Z,T"),
        partition: str = typer.Option("", "--partition", "-p"),
):
    """Membership of a partition in each class."""
    config = get_config(ctx)
    p = parse_partition(partition)
    parsed = [parse_spec(text) for text in specs]
    memberships = guarded(lambda: [Membership(spec=str(s), member=contains(s, p)) for s in parsed])
    render.classification(ClassificationOut(partition=list(p.parts), memberships=memberships), config.format)


def enumerate_command(
        ctx: typer.Context,
        n: int = typer.Argument(..., min=0, help="Weight, or the weight bound with --t-cores"),
        spec: str = typer.Option("all", "--class", "-c", help="Class to enumerate"),
        t_cores: Optional[int] = typer.Option(None, "--t-cores", help="List the t-cores of weight <= n instead"),
):
    """List the members of a class of weight n, or every t-core up to weight n."""
    config = get_config(ctx)
    if t_cores is not None:
        t = check_modulus(t_cores)
        cores = guarded(lambda: [list(core.parts) for core in enumerate_t_cores(t, n)])
        out = EnumerationOut(n=n, t=t, count=len(cores), partitions=cores)
    else:
        parsed = parse_spec(spec)
        members = guarded(lambda: [list(p.parts) for p in enumerate_class(parsed, n)])
        out = EnumerationOut(n=n, spec=str(parsed), count=len(members), partitions=members)
    render.enumeration(out, config.format)
