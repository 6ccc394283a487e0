from typing import List, Optional
from pydantic import BaseModel
from models.boundary_word import BoundaryWord
from models.decomposition import CoreVector, Decomposition
from models.partition import Partition


class DecompositionOut(BaseModel):
    partition: List[int]
    t: int
    core: List[int]
    quotient: List[List[int]]
    word: str
    kappa: List[int]

    @classmethod
    def build(cls, p: Partition, d: Decomposition, word: BoundaryWord, vector: CoreVector) -> "DecompositionOut":
        return cls(
            partition=list(p.parts),
            t=d.modulus,
            core=list(d.core.parts),
            quotient=[list(nu.parts) for nu in d.quotient],
            word=word.render(),
            kappa=list(vector.entries),
        )


class Membership(BaseModel):
    spec: str
    member: bool


class ClassificationOut(BaseModel):
    partition: List[int]
    memberships: List[Membership] = []


class EnumerationOut(BaseModel):
    n: int
    spec: Optional[str] = None
    t: Optional[int] = None
    count: int
    partitions: List[List[int]] = []
