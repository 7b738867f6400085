"""Integer partitions, enumerated in reverse-lexicographic order.

A partition of n is a weakly decreasing tuple of positive integers summing
to n; the empty tuple is the unique partition of 0.  Reverse-lexicographic
order starts at (n) and ends at (1,...,1), which fixes a deterministic
enumeration for output and test fixtures.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

Partition = tuple[int, ...]


def validate_partition(parts) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p < 1 for p in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {lam}")
    return lam


def iter_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield partitions of n with parts bounded by max_part, largest part first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    bound = n if max_part is None else min(max_part, n)
    for first in range(bound, 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, starting from (n)."""
    return list(iter_partitions(n))


def multiplicities(lam: Partition) -> dict[int, int]:
    """Map part value j to its count n_j, so that sum of j*n_j is n."""
    return dict(Counter(lam))
