from enum import Enum
from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field, validator
from core.config import settings


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class Witness(BaseModel):
    n: int
    lhs: Any
    rhs: Any


class CheckReport(BaseModel):
    identity_id: str
    params: Dict[str, Any] = {}
    verdict: Verdict
    max_order_checked: int
    witness: Optional[Witness] = None
    elapsed_ms: float = 0.0
    notes: List[str] = []

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS


class CheckRequest(BaseModel):
    """
    Parameters accepted by every catalog check; each check reads the ones it needs
    """

    t: Optional[int] = None
    z: Optional[int] = None
    k: int = 1
    beta: Optional[int] = None
    rho: Optional[str] = None
    rho1: Optional[str] = None
    rho2: Optional[str] = None
    seed: Optional[int] = None
    form: Optional[str] = None
    order: Optional[int] = None
    n_max: Optional[int] = None
    degree_cap: Optional[int] = None
    closed_forms: bool = False

    @validator("t", "k")
    def must_be_positive(cls, v):
        if v is not None and v < 1:
            raise ValueError("must be a positive integer")
        return v

    @validator("order", "n_max", "degree_cap")
    def must_be_nonnegative(cls, v):
        if v is not None and v < 0:
            raise ValueError("must be a nonnegative integer")
        return v

    @validator("beta")
    def beta_in_range(cls, v):
        if v is not None and v not in (0, 1, 2):
            raise ValueError("beta must be 0, 1 or 2")
        return v

    @validator("form")
    def known_form(cls, v):
        if v is not None and v.upper() not in ("A", "B"):
            raise ValueError("form must be A (weight t) or B (weight 2t-z+1)")
        return v.upper() if v is not None else v

    def echo(self) -> Dict[str, Any]:
        return self.dict(exclude_none=True, exclude_defaults=True)


class BoundedCheckRequest(CheckRequest):
    """CheckRequest with the size limits enforced on the HTTP surface"""

    t: Optional[int] = Field(None, le=settings.API_MAX_T)
    order: Optional[int] = Field(None, le=settings.API_MAX_ORDER)
    n_max: Optional[int] = Field(None, le=settings.API_MAX_N_MAX)
    degree_cap: Optional[int] = Field(None, le=settings.API_MAX_DEGREE_CAP)
