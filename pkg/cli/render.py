import json
from typing import Any, Iterable, List, Sequence
import typer
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table
from cli.deps import OutputFormat
from models.partition import Partition
from schemas.partition import ClassificationOut, DecompositionOut, EnumerationOut
from schemas.report import CheckReport
from schemas.series import SeriesOut

console = Console()


def _parts(parts: Sequence[int]) -> str:
    return "[" + ",".join(str(part) for part in parts) + "]"


def _cell(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ",".join(str(v) for v in value) + "]"
    return str(value)


def _echo_json(payload: Any):
    if isinstance(payload, BaseModel):
        payload = payload.dict()
    elif isinstance(payload, list):
        payload = [item.dict() if isinstance(item, BaseModel) else item for item in payload]
    typer.echo(json.dumps(payload, indent=2))


def _echo_tsv(rows: Iterable[Sequence[Any]]):
    for row in rows:
        typer.echo("\t".join(_cell(value) for value in row))


def decomposition(out: DecompositionOut, fmt: OutputFormat):
    if fmt == OutputFormat.JSON:
        return _echo_json(out)
    if fmt == OutputFormat.TSV:
        return _echo_tsv([
            ("partition", out.partition), ("t", out.t), ("core", out.core),
            ("quotient", "[" + ",".join(_parts(nu) for nu in out.quotient) + "]"),
            ("word", out.word), ("kappa", out.kappa),
        ])
    table = Table(title=f"{out.t}-decomposition of {_parts(out.partition)}", show_header=False)
    table.add_row("core", _parts(out.core))
    table.add_row("quotient", "[" + ",".join(_parts(nu) for nu in out.quotient) + "]")
    table.add_row("boundary word", out.word)
    table.add_row("core vector", _parts(out.kappa))
    console.print(table)


def classification(out: ClassificationOut, fmt: OutputFormat):
    if fmt == OutputFormat.JSON:
        return _echo_json(out)
    rows = [(m.spec, str(m.member).lower()) for m in out.memberships]
    if fmt == OutputFormat.TSV:
        return _echo_tsv(rows)
    table = Table(title=f"Classes of {_parts(out.partition)}")
    table.add_column("class")
    table.add_column("member")
    for spec, member in rows:
        table.add_row(spec, member)
    console.print(table)


def enumeration(out: EnumerationOut, fmt: OutputFormat):
    if fmt == OutputFormat.JSON:
        return _echo_json(out)
    if fmt == OutputFormat.TSV:
        return _echo_tsv([(Partition(parts).weight, parts) for parts in out.partitions])
    title = f"{out.t}-cores of weight <= {out.n}" if out.t else f"{out.spec}({out.n})"
    table = Table(title=f"{title}: {out.count}")
    table.add_column("weight", justify="right")
    table.add_column("partition")
    for parts in out.partitions:
        table.add_row(str(sum(parts)), _parts(parts) if parts else "()")
    console.print(table)


def series(out: SeriesOut, fmt: OutputFormat):
    if fmt == OutputFormat.JSON:
        return _echo_json(out)
    if fmt == OutputFormat.TSV:
        return _echo_tsv(enumerate(out.coefficients))
    console.print(f"[bold]{out.source}[/bold] {out.params} over {out.ring} to order {out.order}")
    console.print(",".join(_cell(c) for c in out.coefficients))


def reports(items: List[CheckReport], fmt: OutputFormat):
    if fmt == OutputFormat.JSON:
        return _echo_json(items[0] if len(items) == 1 else items)
    if fmt == OutputFormat.TSV:
        return _echo_tsv(
            (r.identity_id, json.dumps(r.params), r.verdict.value, r.max_order_checked,
             json.dumps(r.witness.dict()) if r.witness else "", r.elapsed_ms)
            for r in items
        )
    table = Table(title="Checks")
    for column in ("check", "params", "verdict", "order", "witness", "ms"):
        table.add_column(column)
    for r in items:
        verdict = "[green]pass[/green]" if r.passed else "[red]fail[/red]"
        witness = f"n={r.witness.n}: {r.witness.lhs} != {r.witness.rhs}" if r.witness else ""
        table.add_row(r.identity_id, json.dumps(r.params), verdict, str(r.max_order_checked),
                      witness, f"{r.elapsed_ms:.0f}")
    console.print(table)
    failed = sum(1 for r in items if not r.passed)
    console.print(f"{len(items) - failed} passed, {failed} failed")
