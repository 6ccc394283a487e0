from fastapi import APIRouter, Depends, Query
from core.config import settings
from typing import Any, List
from api.deps import domain_errors, get_partition, parse_spec
from models.boundary_word import encode_word
from models.partition import Partition
from schemas.partition import ClassificationOut, DecompositionOut, EnumerationOut, Membership
from services.classes import contains, enumerate_class
from services.littlewood import decompose, enumerate_t_cores, kappa

router = APIRouter()


@router.get("/decompose", response_model=DecompositionOut)
def decompose_partition(
        t: int = Query(..., ge=1),
        p: Partition = Depends(get_partition),
) -> Any:
    """
    t-core, t-quotient, boundary word and core vector of a partition
    """
    with domain_errors():
        d = decompose(p, t)
        return DecompositionOut.build(p, d, encode_word(p), kappa(d.core, t))


@router.get("/classify", response_model=ClassificationOut)
def classify_partition(
        spec: List[str] = Query(..., description="Class strings such as sc, pz:1, bgt:5, bgzt:1,5"),
        p: Partition = Depends(get_partition),
) -> Any:
    memberships = []
    for text in spec:
        parsed = parse_spec(text)
        with domain_errors():
            memberships.append(Membership(spec=str(parsed), member=contains(parsed, p)))
    return ClassificationOut(partition=list(p.parts), memberships=memberships)


@router.get("/enumerate", response_model=EnumerationOut)
def enumerate_members(
        n: int = Query(..., ge=0, le=settings.API_MAX_WEIGHT),
        spec: str = Query("all"),
) -> Any:
    parsed = parse_spec(spec)
    with domain_errors():
        members = [list(m.parts) for m in enumerate_class(parsed, n)]
    return EnumerationOut(n=n, spec=str(parsed), count=len(members), partitions=members)


@router.get("/t-cores", response_model=EnumerationOut)
def list_t_cores(
        t: int = Query(..., ge=1, le=settings.API_MAX_T),
        n_max: int = Query(..., ge=0, le=settings.API_MAX_N_MAX),
) -> Any:
    """
    All t-cores of weight at most n_max
    """
    with domain_errors():
        cores = [list(core.parts) for core in enumerate_t_cores(t, n_max)]
    return EnumerationOut(n=n_max, t=t, count=len(cores), partitions=cores)
