from fastapi import APIRouter, Query
from typing import Any
from api.deps import domain_errors, parse_spec
from core.config import settings
from schemas.report import BoundedCheckRequest
from schemas.series import SeriesOut
from services.harness.formulas import as_request, plan_identity
from services.harness.statistics import class_statistic_series

router = APIRouter()


@router.get("/class/{spec}", response_model=SeriesOut)
def class_series(spec: str, order: int = Query(settings.DEFAULT_ORDER, ge=0, le=settings.API_MAX_ORDER)) -> Any:
    """
    Generating function of a class, sum of q^|p| over its members
    """
    parsed = parse_spec(spec)
    with domain_errors():
        s = class_statistic_series(parsed, 1, order)
    return SeriesOut.build(str(parsed), s, {"order": order})


@router.post("/rhs/{identity_id}", response_model=SeriesOut)
def rhs_series(identity_id: str, params: BoundedCheckRequest) -> Any:
    """
    Product side of a catalog identity
    """
    with domain_errors():
        plan = plan_identity(identity_id, as_request(params))
        s = plan.rhs()
    return SeriesOut.build(identity_id, s, plan.params)
