"""Restricted partitions: partitions of n into at most d parts, each part at most k.

The canonical ordering used everywhere in this package is decreasing
lexicographic order on the padded part-tuple (lambda_1, ..., lambda_d).
All matrix row/column indexings downstream depend on this pin.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Partition:
    """A restricted partition: d weakly decreasing parts, each in [0, k]."""

    parts: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"part bound k must be >= 1, got {self.k}")
        if not self.parts:
            raise ValueError("partition needs at least one slot (d >= 1)")
        if any(p < 0 for p in self.parts) or self.parts[0] > self.k:
            raise ValueError(f"parts {self.parts} out of range [0, {self.k}]")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts {self.parts} not weakly decreasing")

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, i: int) -> int:
        """Number of parts equal to i."""
        return self.parts.count(i)

    def exponents(self) -> tuple[int, ...]:
        """Exponent form (e_k, ..., e_1, e_0): e_i = number of parts equal to i."""
        counts = [0] * (self.k + 1)
        for p in self.parts:
            counts[p] += 1
        return tuple(reversed(counts))

    def exponents_ascending(self) -> tuple[int, ...]:
        """(e_0, e_1, ..., e_k), handy when indexing by part value."""
        counts = [0] * (self.k + 1)
        for p in self.parts:
            counts[p] += 1
        return tuple(counts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def from_exponents(exps: tuple[int, ...] | list[int], k: int) -> Partition:
    """Inverse of Partition.exponents: rebuild the partition from (e_k, ..., e_0).

    Rejects vectors of the wrong length, with negative entries, or whose
    entries do not sum to a positive number of slots d.
    """
    exps = tuple(exps)
    if len(exps) != k + 1:
        raise ValueError(f"expected {k + 1} exponents for k={k}, got {len(exps)}")
    if any(e < 0 for e in exps):
        raise ValueError(f"negative exponent in {exps}")
    d = sum(exps)
    if d < 1:
        raise ValueError("exponents must sum to d >= 1")
    parts: list[int] = []
    for idx, e in enumerate(exps):
        parts.extend([k - idx] * e)
    return Partition(tuple(parts), k)


@dataclass(frozen=True)
class PartitionList:
    """All of P(k, d, n) in the canonical (decreasing lexicographic) order."""

    k: int
    d: int
    n: int
    items: tuple[Partition, ...]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __getitem__(self, idx):
        return self.items[idx]

    def index(self, part: Partition) -> int:
        return self.items.index(part)


def _descending_tuples(k: int, d: int, n: int):
    """Yield weakly decreasing d-tuples with entries <= k summing to n,
    in decreasing lexicographic order."""
    if d == 0:
        if n == 0:
            yield ()
        return
    # First part ranges from min(k, n) down to the least value that still
    # lets the remaining d-1 parts absorb the rest.
    lo = -(-n // d)  # ceil(n/d)
    for first in range(min(k, n), lo - 1, -1):
        for rest in _descending_tuples(first, d - 1, n - first):
            yield (first, *rest)


def enumerate_partitions(k: int, d: int, n: int) -> PartitionList:
    """All restricted partitions P(k, d, n), canonically ordered.

    n > dk yields the empty list; n = 0 yields the single all-zero partition.
    """
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    if n < 0:
        raise ValueError(f"n must be nonnegative, got n={n}")
    items = tuple(Partition(t, k) for t in _descending_tuples(k, d, n))
    return PartitionList(k, d, n, items)


@lru_cache(maxsize=None)
def count_partitions(k: int, d: int, n: int) -> int:
    """p(k, d, n) via the recurrence p(k,d,n) = p(k,d-1,n) + p(k-1,d,n-d).

    Conventions: p(k,0,n) = p(0,d,n) = [n == 0], and 0 whenever n < 0 or n > dk.
    Memoized; the memo table is managed by lru_cache and is thread-safe.
    """
    if k < 0 or d < 0:
        raise ValueError(f"k and d must be nonnegative, got k={k}, d={d}")
    if n < 0 or n > d * k:
        return 0
    if d == 0 or k == 0:
        return 1 if n == 0 else 0
    return count_partitions(k, d - 1, n) + count_partitions(k - 1, d, n - d)


def gaussian_binomial(k: int, d: int) -> list[int]:
    """Coefficient list of the Gaussian binomial C(d+k, d)_q, length dk + 1.

    Entry n is p(k, d, n); the list is symmetric and unimodal.
    """
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    return [count_partitions(k, d, n) for n in range(d * k + 1)]
