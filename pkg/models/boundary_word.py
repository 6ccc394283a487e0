from typing import FrozenSet, Sequence, Tuple
from core.errors import BoundaryWordError, PartitionError
from models.partition import FrobeniusCoords, Partition

Letters = Tuple[int, ...]


def _trim(letters: Sequence[int], offset: int) -> Tuple[Letters, int]:
    letters = tuple(letters)
    if any(letter not in (0, 1) for letter in letters):
        raise BoundaryWordError(f"Boundary words are over {{0, 1}}, got {letters}")
    start, stop = 0, len(letters)
    while start < stop and letters[start] == 0:
        start += 1
    while stop > start and letters[stop - 1] == 1:
        stop -= 1
    return letters[start:stop], offset + start


def charge(letters: Sequence[int], offset: int) -> int:
    """
    Position of the first 1 once every "10" has been sorted to "01".

    It equals #{i >= 0 : c_i = 0} - #{i <= -1 : c_i = 1}, so a word is balanced
    (median at index 0) exactly when its charge is 0. Padding with leading 0s or
    trailing 1s does not change it.
    """
    return offset + sum(1 for letter in letters if letter == 0)


class BoundaryWord:
    """
    Two-sided 0/1 word stored as its minimal window plus the index of its first letter.

    Letters left of the window are 0 and letters right of it are 1. The window always
    starts with a 1 and ends with a 0, and the word is balanced around index 0.
    """

    __slots__ = ("window", "offset")

    def __init__(self, window: Sequence[int], offset: int = 0):
        window, offset = _trim(window, offset)
        if charge(window, offset) != 0:
            raise BoundaryWordError(
                f"Word is not balanced (charge {charge(window, offset)}): {window} at {offset}"
            )
        object.__setattr__(self, "window", window)
        object.__setattr__(self, "offset", offset)

    @classmethod
    def from_string(cls, text: str) -> "BoundaryWord":
        cleaned = text.strip().replace("…", "").replace("...", "")
        if cleaned.count("|") != 1:
            raise BoundaryWordError(f"Expected exactly one median marker in '{text}'")
        left, right = cleaned.split("|")
        try:
            letters = [int(letter) for letter in left + right]
        except ValueError:
            raise BoundaryWordError(f"Malformed boundary word '{text}'")
        return cls(letters, -len(left))

    def __setattr__(self, name, value):
        raise AttributeError("BoundaryWord is immutable")

    def __eq__(self, other) -> bool:
        if isinstance(other, BoundaryWord):
            return self.window == other.window and self.offset == other.offset
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.window, self.offset))

    def __repr__(self) -> str:
        return f"BoundaryWord({self.render()})"

    def __str__(self) -> str:
        return self.render()

    @property
    def last(self) -> int:
        """Index of the last window letter (offset - 1 for the empty window)"""
        return self.offset + len(self.window) - 1

    def letter(self, i: int) -> int:
        if i < self.offset:
            return 0
        if i > self.last:
            return 1
        return self.window[i - self.offset]

    def positions(self, value: int) -> Tuple[int, ...]:
        return tuple(self.offset + k for k, letter in enumerate(self.window) if letter == value)

    def render(self) -> str:
        if not self.window:
            return "…000|111…"
        m = max(3, 1 + max(abs(self.offset), abs(self.last)))
        left = "".join(str(self.letter(i)) for i in range(-m, 0))
        right = "".join(str(self.letter(i)) for i in range(0, m + 1))
        return f"…{left}|{right}…"

    def durfee(self) -> int:
        return sum(1 for i in self.positions(1) if i < 0)


EMPTY_WORD = BoundaryWord((), 0)


def encode_word(p: Partition) -> BoundaryWord:
    if not p:
        return EMPTY_WORD
    ell = p.length
    zeros = {part - i for i, part in enumerate(p.parts, start=1)}
    start, stop = -ell, p.parts[0] - 1
    letters = [0 if i in zeros else 1 for i in range(start, stop + 1)]
    return BoundaryWord(letters, start)


def decode_word(w: BoundaryWord) -> Partition:
    # Zeros read right to left are lambda_j - j
    zeros = sorted(w.positions(0), reverse=True)
    return Partition(z + j for j, z in enumerate(zeros, start=1))


def conjugate_word(w: BoundaryWord) -> BoundaryWord:
    start, stop = -w.last - 1, -w.offset - 1
    letters = [1 - w.letter(-i - 1) for i in range(start, stop + 1)]
    return BoundaryWord(letters, start)


def hook_index_pairs(p: Partition) -> FrozenSet[Tuple[int, int]]:
    w = encode_word(p)
    zeros = w.positions(0)
    return frozenset((i, j) for i in w.positions(1) for j in zeros if i < j)


def box_index_pair(p: Partition, row: int, col: int) -> Tuple[int, int]:
    """Index pair (i, j) of the box in 1-based (row, col); j - i is its hook length"""
    if not (1 <= row <= p.length and 1 <= col <= p.part(row)):
        raise PartitionError(f"Box ({row}, {col}) is not in {p.parts}")
    return col - p.conjugate().part(col) - 1, p.part(row) - row


def frobenius_from_word(w: BoundaryWord) -> FrobeniusCoords:
    arms = sorted((i for i in w.positions(0) if i >= 0), reverse=True)
    legs = sorted((-i - 1 for i in w.positions(1) if i < 0), reverse=True)
    return FrobeniusCoords(arms, legs)


def split_subword(w: BoundaryWord, t: int, k: int) -> Tuple[BoundaryWord, int]:
    """
    Extract the sub-word (c_{ti+k})_i, recentred on its own median.

    Returns the balanced word together with the charge it had before recentring.
    """
    if t < 1 or not 0 <= k < t:
        raise BoundaryWordError(f"Invalid residue {k} modulo {t}")
    low = (w.offset - k) // t
    high = -((k - w.last) // t)
    letters, offset = _trim([w.letter(t * i + k) for i in range(low, high + 1)], low)
    shift = charge(letters, offset)
    return BoundaryWord(letters, offset - shift), shift


def interleave(subwords: Sequence[BoundaryWord], charges: Sequence[int]) -> BoundaryWord:
    """Inverse of split_subword over all residues: place sub-word k, shifted by its charge, at ti+k"""
    t = len(subwords)
    if t < 1 or len(charges) != t:
        raise BoundaryWordError("Need one charge per sub-word")
    low = min(t * (sub.offset + n) + k for k, (sub, n) in enumerate(zip(subwords, charges)))
    high = max(t * (sub.last + n) + k for k, (sub, n) in enumerate(zip(subwords, charges)))
    low, high = min(low, 0) - t, max(high, 0) + t
    letters = []
    for position in range(low, high + 1):
        k = position % t
        letters.append(subwords[k].letter((position - k) // t - charges[k]))
    return BoundaryWord(letters, low)
