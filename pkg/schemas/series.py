from typing import Any, Dict, List
from pydantic import BaseModel
from models.series import TruncatedSeries


class SeriesOut(BaseModel):
    """Coefficients 0..order; polynomial coefficients are lists of rational strings in the ring variable"""

    source: str
    params: Dict[str, Any] = {}
    order: int
    ring: str
    coefficients: List[Any]

    @classmethod
    def build(cls, source: str, s: TruncatedSeries, params: Dict[str, Any] = None) -> "SeriesOut":
        return cls(source=source, params=params or {}, order=s.order, ring=str(s.ring), coefficients=s.to_json())
