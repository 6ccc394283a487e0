from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple
from core.errors import DecompositionError
from models.partition import Partition


@dataclass(frozen=True)
class Decomposition:
    """A t-core together with the ordered t-quotient (nu^(0), ..., nu^(t-1))"""

    core: Partition
    quotient: Tuple[Partition, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DecompositionError(f"Modulus must be positive, got {self.modulus}")
        object.__setattr__(self, "quotient", tuple(self.quotient))
        if len(self.quotient) != self.modulus:
            raise DecompositionError(
                f"Quotient must have {self.modulus} components, got {len(self.quotient)}"
            )

    @property
    def quotient_weight(self) -> int:
        return sum(nu.weight for nu in self.quotient)

    @property
    def weight(self) -> int:
        return self.core.weight + self.modulus * self.quotient_weight

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t": self.modulus,
            "core": list(self.core.parts),
            "quotient": [list(nu.parts) for nu in self.quotient],
        }


@dataclass(frozen=True)
class CoreVector:
    """Zero-sum integer vector (n_0, ..., n_{t-1}) attached to a t-core"""

    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise DecompositionError("Core vectors need at least one entry")
        if sum(self.entries) != 0:
            raise DecompositionError(f"Core vector entries must sum to 0: {self.entries}")

    @classmethod
    def of(cls, entries: Sequence[int]) -> "CoreVector":
        return cls(tuple(entries))

    @property
    def modulus(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class AlbionEntry:
    """One clause of the z-asymmetric decomposition shape; index is None for the core clause"""

    index: Optional[int]
    relation: str
    status: str
    mu: Optional[Partition] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "relation": self.relation,
            "status": self.status,
            "mu": list(self.mu.parts) if self.mu is not None else None,
        }


@dataclass(frozen=True)
class AlbionReport:
    partition: Partition
    z: int
    t: int
    core_vector: CoreVector
    entries: Tuple[AlbionEntry, ...]

    @property
    def passed(self) -> bool:
        return all(entry.status != "fail" for entry in self.entries)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "partition": list(self.partition.parts),
            "z": self.z,
            "t": self.t,
            "core_vector": list(self.core_vector.entries),
            "passed": self.passed,
            "entries": [entry.to_dict() for entry in self.entries],
        }
