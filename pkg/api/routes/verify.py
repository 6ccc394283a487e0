from fastapi import APIRouter
from typing import Any, List
from api.deps import domain_errors
from schemas.report import BoundedCheckRequest, CheckReport
from services.harness.catalog import known_checks, run_check

router = APIRouter()


@router.get("/", response_model=List[str])
def list_checks() -> Any:
    return known_checks()


@router.post("/{check_id}", response_model=CheckReport)
def verify(check_id: str, params: BoundedCheckRequest) -> Any:
    """
    Run one identity, congruence or structural check
    """
    with domain_errors():
        return run_check(check_id, params.echo())
