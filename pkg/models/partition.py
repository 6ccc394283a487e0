from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple
from core.errors import PartitionError


class Partition:
    """
    Immutable integer partition stored as its non-increasing tuple of positive parts.

    Trailing zeros are never stored, so equality and hashing are canonical.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for index, part in enumerate(parts):
            if not isinstance(part, int) or isinstance(part, bool):
                raise PartitionError(f"Part {part!r} is not an integer")
            if part < 1:
                raise PartitionError(f"Part {part} at position {index} is not positive")
            if index and parts[index - 1] < part:
                raise PartitionError(
                    f"Parts must be non-increasing, got {parts[index - 1]} before {part}"
                )
        object.__setattr__(self, "parts", parts)

    @classmethod
    def trusted(cls, parts: Tuple[int, ...]) -> "Partition":
        # Caller guarantees a valid non-increasing tuple of positive ints
        obj = object.__new__(cls)
        object.__setattr__(obj, "parts", parts)
        return obj

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        text = text.strip()
        if not text:
            return EMPTY
        try:
            parts = [int(piece) for piece in text.split(",")]
        except ValueError:
            raise PartitionError(f"Malformed partition string '{text}'")
        return cls(parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, index: int) -> int:
        return self.parts[index]

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({', '.join(str(part) for part in self.parts)})"

    def __str__(self) -> str:
        return self.to_string()

    def to_string(self) -> str:
        return ",".join(str(part) for part in self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """1-based part access, zero beyond the length"""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self) -> "Partition":
        parts = self.parts
        if not parts:
            return self
        conj = []
        row = len(parts)
        for column in range(1, parts[0] + 1):
            while parts[row - 1] < column:
                row -= 1
            conj.append(row)
        return Partition.trusted(tuple(conj))

    def durfee(self) -> int:
        d = 0
        for i, part in enumerate(self.parts, start=1):
            if part < i:
                break
            d = i
        return d

    def shifted_durfee(self, c: int) -> int:
        """Durfee size of the partition left after removing the first c parts"""
        if c < 0:
            raise PartitionError(f"Cannot remove {c} parts")
        return Partition.trusted(self.parts[c:]).durfee()

    def frobenius(self) -> "FrobeniusCoords":
        d = self.durfee()
        conj = self.conjugate()
        arms = tuple(self.parts[i] - i - 1 for i in range(d))
        legs = tuple(conj.parts[i] - i - 1 for i in range(d))
        return FrobeniusCoords(arms, legs)

    def diagonal_hooks(self) -> Tuple[int, ...]:
        coords = self.frobenius()
        return tuple(a + b + 1 for a, b in zip(coords.arms, coords.legs))

    def hooks(self, t: int = 1) -> "HookMultiset":
        """Multiset of hook lengths divisible by t; the conjugate is computed once"""
        if t < 1:
            raise PartitionError(f"Hook modulus must be positive, got {t}")
        parts = self.parts
        if not parts:
            return HookMultiset({})
        conj = self.conjugate().parts
        counts: Dict[int, int] = {}
        for i, row in enumerate(parts, start=1):
            for j in range(1, row + 1):
                hook = row - j + conj[j - 1] - i + 1
                if hook % t == 0:
                    counts[hook] = counts.get(hook, 0) + 1
        return HookMultiset(counts)

    def count_hooks_equal(self, t: int) -> int:
        """Number of hooks of length exactly t (the n_t statistic)"""
        if t < 1:
            raise PartitionError(f"Hook length must be positive, got {t}")
        parts = self.parts
        ell = len(parts)
        betas = {part - i for i, part in enumerate(parts, start=1)}
        # Beyond the last part the beta set contains every integer <= -ell-1
        return sum(1 for b in betas if b - t >= -ell and (b - t) not in betas)

    def count_part(self, k: int) -> int:
        return sum(1 for part in self.parts if part == k)


EMPTY = Partition.trusted(())


def make_partition(parts: Sequence[int]) -> Partition:
    return Partition(parts)


def componentwise_add(p: Partition, q: Partition) -> Partition:
    size = max(len(p), len(q))
    return Partition.trusted(tuple(p.part(i) + q.part(i) for i in range(1, size + 1)))


def column(height: int) -> Partition:
    """The single-column partition (1^height)"""
    if height < 0:
        raise PartitionError(f"Column height must be nonnegative, got {height}")
    return Partition.trusted((1,) * height)


class FrobeniusCoords:
    __slots__ = ("arms", "legs")

    def __init__(self, arms: Sequence[int], legs: Sequence[int]):
        arms, legs = tuple(arms), tuple(legs)
        if len(arms) != len(legs):
            raise PartitionError(
                f"Frobenius rows must have equal length, got {len(arms)} and {len(legs)}"
            )
        for name, row in (("arms", arms), ("legs", legs)):
            if any(value < 0 for value in row):
                raise PartitionError(f"Frobenius {name} must be nonnegative: {row}")
            if any(row[i] <= row[i + 1] for i in range(len(row) - 1)):
                raise PartitionError(f"Frobenius {name} must be strictly decreasing: {row}")
        object.__setattr__(self, "arms", arms)
        object.__setattr__(self, "legs", legs)

    def __setattr__(self, name, value):
        raise AttributeError("FrobeniusCoords is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, FrobeniusCoords):
            return self.arms == other.arms and self.legs == other.legs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.arms, self.legs))

    def __repr__(self) -> str:
        return f"FrobeniusCoords(arms={self.arms}, legs={self.legs})"

    @property
    def rank(self) -> int:
        return len(self.arms)

    @property
    def weight(self) -> int:
        return self.rank + sum(self.arms) + sum(self.legs)

    def to_partition(self) -> Partition:
        return from_frobenius(self)


def from_frobenius(coords: FrobeniusCoords) -> Partition:
    d = coords.rank
    rows: List[int] = [coords.arms[i] + i + 1 for i in range(d)]
    columns = [coords.legs[j] + j + 1 for j in range(d)]
    # Rows below the Durfee square only meet the first d columns
    i = d + 1
    while True:
        width = sum(1 for height in columns if height >= i)
        if width == 0:
            break
        rows.append(width)
        i += 1
    return Partition(rows)


class HookMultiset:
    """Immutable multiset of hook lengths, stored as value -> multiplicity"""

    __slots__ = ("counts",)

    def __init__(self, counts: Mapping[int, int]):
        cleaned = {value: mult for value, mult in counts.items() if mult}
        for value, mult in cleaned.items():
            if value < 1 or mult < 0:
                raise PartitionError(f"Invalid hook entry {value}: {mult}")
        object.__setattr__(self, "counts", dict(sorted(cleaned.items())))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "HookMultiset":
        counts: Dict[int, int] = {}
        for value in values:
            counts[value] = counts.get(value, 0) + 1
        return cls(counts)

    def __setattr__(self, name, value):
        raise AttributeError("HookMultiset is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, HookMultiset):
            return self.counts == other.counts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.counts.items()))

    def __repr__(self) -> str:
        return f"HookMultiset({self.counts})"

    def __len__(self) -> int:
        return self.total

    def __contains__(self, value: int) -> bool:
        return value in self.counts

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def multiplicity(self, value: int) -> int:
        return self.counts.get(value, 0)

    def items(self):
        return self.counts.items()

    def elements(self) -> List[int]:
        return [value for value, mult in self.counts.items() for _ in range(mult)]

    def scale(self, k: int) -> "HookMultiset":
        return HookMultiset({v * k: m for v, m in self.counts.items()})

    def union(self, other: "HookMultiset") -> "HookMultiset":
        merged = dict(self.counts)
        for value, mult in other.counts.items():
            merged[value] = merged.get(value, 0) + mult
        return HookMultiset(merged)

    def all_even(self) -> bool:
        return all(mult % 2 == 0 for mult in self.counts.values())

    def first_odd(self) -> Optional[int]:
        for value, mult in self.counts.items():
            if mult % 2:
                return value
        return None
