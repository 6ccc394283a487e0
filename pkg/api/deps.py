import logging
from contextlib import contextmanager
from fastapi import HTTPException, Query, status
from core.errors import HookCalcError, UnknownIdentityError
from models.partition import Partition
from schemas.class_spec import ClassSpec

logger = logging.getLogger(__name__)


def get_partition(partition: str = Query("", description="Comma separated parts, e.g. 5,5,2,2")) -> Partition:
    """
    Parse the partition query parameter
    """
    try:
        return Partition.from_string(partition)
    except HookCalcError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))


def parse_spec(text: str) -> ClassSpec:
    try:
        return ClassSpec.parse(text)
    except HookCalcError as e:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))


@contextmanager
def domain_errors():
    """
    Map domain errors onto HTTP errors: unknown catalog ids are 404, the rest 400
    """
    try:
        yield
    except UnknownIdentityError as e:
        raise HTTPException(status_code=status.HTTP_404_NOT_FOUND, detail=str(e))
    except HookCalcError as e:
        logger.error(f"Request rejected: {e}")
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(e))
