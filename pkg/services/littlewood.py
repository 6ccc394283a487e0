import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple
from core.errors import DecompositionError, PartitionError
from models.boundary_word import EMPTY_WORD, decode_word, encode_word, interleave, split_subword
from models.decomposition import CoreVector, Decomposition
from models.partition import Partition

logger = logging.getLogger(__name__)


def _check_modulus(t: int):
    if not isinstance(t, int) or t < 1:
        raise DecompositionError(f"Modulus must be a positive integer, got {t!r}")


def is_t_core(p: Partition, t: int) -> bool:
    """
    True iff p has no hook divisible by t.

    A partition with a hook divisible by t always has a hook of length exactly t,
    so it is enough to look for the latter on the beta set.
    """
    _check_modulus(t)
    return p.count_hooks_equal(t) == 0


def decompose(p: Partition, t: int) -> Decomposition:
    _check_modulus(t)
    word = encode_word(p)
    quotient: List[Partition] = []
    charges: List[int] = []
    for k in range(t):
        subword, charge = split_subword(word, t, k)
        quotient.append(decode_word(subword))
        charges.append(charge)
    core = kappa_inverse(CoreVector.of(charges))
    return Decomposition(core=core, quotient=tuple(quotient), modulus=t)


def recompose(d: Decomposition) -> Partition:
    t = d.modulus
    if not is_t_core(d.core, t):
        raise DecompositionError(f"{d.core.parts} is not a {t}-core")
    charges = kappa(d.core, t).entries
    word = interleave([encode_word(nu) for nu in d.quotient], charges)
    return decode_word(word)


def kappa(core: Partition, t: int) -> CoreVector:
    """
    Zero-sum vector of a t-core: entry k is the index of the first 1 in the k-th sub-word
    """
    if not is_t_core(core, t):
        raise DecompositionError(f"{core.parts} is not a {t}-core")
    word = encode_word(core)
    return CoreVector.of(split_subword(word, t, k)[1] for k in range(t))


def kappa_inverse(v: CoreVector) -> Partition:
    return decode_word(interleave([EMPTY_WORD] * v.modulus, v.entries))


def core_weight(v: CoreVector) -> int:
    """|kappa_inverse(v)| = sum over k of t*n_k^2/2 + k*n_k"""
    t = v.modulus
    doubled = sum(t * n * n + 2 * k * n for k, n in enumerate(v))
    return doubled // 2


def strip_rim_hooks(p: Partition, t: int) -> Partition:
    """
    Remove length-t rim hooks one at a time, always the one whose hand sits in the
    topmost row, until none is left.

    Works on the beta set {lambda_j - j}: a rim hook of length t is a bead b with
    b - t free and not below -length.
    """
    _check_modulus(t)
    ell = p.length
    betas = {part - i for i, part in enumerate(p.parts, start=1)}
    while True:
        movable = [b for b in betas if b - t >= -ell and (b - t) not in betas]
        if not movable:
            break
        bead = max(movable)
        betas.remove(bead)
        betas.add(bead - t)
    ordered = sorted(betas, reverse=True)
    parts = [b + j for j, b in enumerate(ordered, start=1)]
    return Partition(part for part in parts if part > 0)


def _coordinate_range(t: int, k: int, budget: int) -> Iterator[int]:
    # Doubled weight t*n^2 + 2kn has its vertex in (-1, 0], so it grows monotonically
    # on both sides of that interval
    n = 0
    while t * n * n + 2 * k * n <= budget:
        yield n
        n += 1
    n = -1
    while t * n * n + 2 * k * n <= budget:
        yield n
        n -= 1


def _relaxed_floor(t: int, start: int, target: int) -> Fraction:
    """
    Lower bound for the doubled weight of coordinates start..t-1 summing to target,
    from the real relaxation: n_j = (lam - j)/t with lam fixed by the sum.
    """
    m = t - start
    indices = range(start, t)
    lam = Fraction(t * target + sum(indices), m)
    return (m * lam * lam - sum(j * j for j in indices)) / t


def enumerate_t_cores(t: int, n_max: int) -> Iterator[Partition]:
    """All t-cores of weight <= n_max, each once, ordered by weight then reverse-lexicographically"""
    _check_modulus(t)
    if n_max < 0:
        raise PartitionError(f"Weight bound must be nonnegative, got {n_max}")
    budget = 2 * n_max
    # Smallest doubled contribution of coordinate k is min(0, t - 2k)
    floors = [min(0, t - 2 * k) for k in range(t)]
    tails = [sum(floors[k:]) for k in range(t + 1)]
    found: List[Tuple[int, Partition]] = []

    def walk(k: int, prefix: List[int], used: int):
        if k == t - 1:
            last = -sum(prefix)
            total = used + t * last * last + 2 * k * last
            if total <= budget:
                vector = CoreVector.of(prefix + [last])
                found.append((total // 2, kappa_inverse(vector)))
            return
        for n in _coordinate_range(t, k, budget - used - tails[k + 1]):
            spent = used + t * n * n + 2 * k * n
            if spent + _relaxed_floor(t, k + 1, -sum(prefix) - n) > budget:
                continue
            walk(k + 1, prefix + [n], spent)

    walk(0, [], 0)
    found.sort(key=lambda item: (item[0], tuple(-part for part in item[1].parts)))
    logger.debug(f"Found {len(found)} {t}-cores of weight <= {n_max}")
    for _, core in found:
        yield core


def t_core_counts(t: int, n_max: int) -> Dict[int, int]:
    counts: Dict[int, int] = {n: 0 for n in range(n_max + 1)}
    for core in enumerate_t_cores(t, n_max):
        counts[core.weight] += 1
    return counts
