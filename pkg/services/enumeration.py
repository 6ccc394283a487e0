import logging
import threading
from typing import Iterator, List
from core.errors import PartitionError
from models.partition import EMPTY, Partition

logger = logging.getLogger(__name__)

_counts: List[int] = [1]
_counts_lock = threading.Lock()


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """
    Yield every partition of n exactly once, in reverse-lexicographic order.

    (n), (n-1, 1), (n-2, 2), (n-2, 1, 1), ..., (1, ..., 1)
    """
    if n < 0:
        raise PartitionError(f"Cannot enumerate partitions of {n}")
    if n == 0:
        yield EMPTY
        return
    parts = [n]
    yield Partition.trusted((n,))
    while True:
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        # Decrease the last part above 1 and refill greedily with the freed weight
        largest = parts.pop() - 1
        remaining = ones + 1
        parts.append(largest)
        while remaining > largest:
            parts.append(largest)
            remaining -= largest
        if remaining:
            parts.append(remaining)
        yield Partition.trusted(tuple(parts))


def enumerate_up_to(n_max: int) -> Iterator[Partition]:
    for n in range(n_max + 1):
        yield from enumerate_partitions(n)


def partition_count(n: int) -> int:
    """|P(n)| through the pentagonal recurrence, memoised in a shared table"""
    if n < 0:
        return 0
    if n < len(_counts):
        return _counts[n]
    with _counts_lock:
        for m in range(len(_counts), n + 1):
            total = 0
            k = 1
            while True:
                first = m - k * (3 * k - 1) // 2
                if first < 0:
                    break
                sign = 1 if k % 2 else -1
                total += sign * _counts[first]
                second = first - k
                if second >= 0:
                    total += sign * _counts[second]
                k += 1
            _counts.append(total)
        logger.debug(f"Partition count table extended to n={n}")
    return _counts[n]
