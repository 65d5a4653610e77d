"""Weighted incidence matrices between adjacent restricted-partition layers.

The matrix for level n has one row per partition of n-1 and one column per
partition of n (canonical order on both sides). Row mu carries the entry
e_i(mu) in the column of the partition obtained from mu by raising one part
equal to i to i+1, for every part value 0 <= i <= k-1 that occurs in mu.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_linalg import Matrix
from .partitions import Partition, PartitionList, enumerate_partitions


def bump(mu: Partition, i: int) -> Partition | None:
    """Raise one part equal to i to i+1, resorted into canonical descending form.

    Returns None when mu has no part equal to i. i must lie in [0, k-1].
    """
    if not 0 <= i <= mu.k - 1:
        raise ValueError(f"bump index {i} outside [0, {mu.k - 1}]")
    if mu.multiplicity(i) == 0:
        return None
    parts = list(mu.parts)
    parts[parts.index(i)] = i + 1
    parts.sort(reverse=True)
    return Partition(tuple(parts), mu.k)


@dataclass(frozen=True)
class IncidenceMatrix:
    """Integer matrix between partition layers n-1 and n, with its labels."""

    k: int
    d: int
    n: int
    row_labels: PartitionList
    col_labels: PartitionList
    entries: tuple[tuple[int, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.row_labels)

    @property
    def cols(self) -> int:
        return len(self.col_labels)

    def matrix(self) -> Matrix:
        return Matrix(self.entries)

    def transpose_matrix(self) -> Matrix:
        return Matrix(self.entries).transpose()


def build_matrix(k: int, d: int, n: int) -> IncidenceMatrix:
    """The weighted incidence matrix at level n, for 1 <= n <= dk."""
    if k < 1 or d < 1:
        raise ValueError(f"k and d must be positive, got k={k}, d={d}")
    if not 1 <= n <= d * k:
        raise ValueError(f"level n={n} outside [1, {d * k}]")
    rows = enumerate_partitions(k, d, n - 1)
    cols = enumerate_partitions(k, d, n)
    col_index = {p.parts: j for j, p in enumerate(cols)}
    entries = []
    for mu in rows:
        row = [0] * len(cols)
        for i in range(k):
            e = mu.multiplicity(i)
            if e == 0:
                continue
            lam = bump(mu, i)
            row[col_index[lam.parts]] = e
        entries.append(tuple(row))
    return IncidenceMatrix(k, d, n, rows, cols, tuple(entries))
