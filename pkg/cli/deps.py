import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Optional, TypeVar
import typer
from pydantic import ValidationError
from rich.console import Console
from core.config import settings
from core.errors import HookCalcError
from models.partition import Partition
from schemas.class_spec import ClassSpec

logger = logging.getLogger(__name__)

T = TypeVar("T")

err_console = Console(stderr=True)


class OutputFormat(str, Enum):
    HUMAN = "human"
    JSON = "json"
    TSV = "tsv"


@dataclass(frozen=True)
class CommandConfig:
    """Global flags, resolved once per invocation and overridable per command"""

    format: OutputFormat = OutputFormat.HUMAN
    order: Optional[int] = None
    n_max: Optional[int] = None
    degree_cap: Optional[int] = None
    jobs: int = 1

    def merged(self, order: Optional[int] = None, n_max: Optional[int] = None,
               degree_cap: Optional[int] = None) -> "CommandConfig":
        return replace(
            self,
            order=self.order if order is None else order,
            n_max=self.n_max if n_max is None else n_max,
            degree_cap=self.degree_cap if degree_cap is None else degree_cap,
        )

    @property
    def series_order(self) -> int:
        return settings.DEFAULT_ORDER if self.order is None else self.order


def get_config(ctx: typer.Context) -> CommandConfig:
    return ctx.obj if isinstance(ctx.obj, CommandConfig) else CommandConfig(jobs=settings.JOBS)


def parse_partition(text: str) -> Partition:
    try:
        return Partition.from_string(text)
    except HookCalcError as e:
        raise typer.BadParameter(str(e))


def parse_spec(text: str) -> ClassSpec:
    try:
        return ClassSpec.parse(text)
    except HookCalcError as e:
        raise typer.BadParameter(str(e))


def check_modulus(t: int, minimum: int = 1) -> int:
    if t < minimum:
        raise typer.BadParameter(f"t must be at least {minimum}, got {t}")
    return t


def guarded(action: Callable[[], T]) -> T:
    """
    Run a command body; domain errors and rejected parameters become usage errors (exit code 2)
    """
    try:
        return action()
    except (HookCalcError, ValidationError) as e:
        logger.error(f"Command failed: {e}")
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(code=2)
