"""Nonnegative solutions of the two-equation diophantine system

    n_1 + n_2 + ... = k        (power sum)
    1*n_1 + 2*n_2 + ... = m    (subscript sum)

Each solution is the exponent vector of one monomial of the reduced
polynomial Z_{m,k}.  Solutions are in bijection with the partitions of m
into exactly k parts: part i appearing n_i times.  No solution uses an
index above m - k + 1, so the search is run on the truncated system.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

__all__ = [
    "MultiplicityVector",
    "enumerate_solutions",
    "enumerate_full",
    "count",
    "partitions",
]


def _check_mk(m: int, k: int) -> None:
    if not isinstance(m, int) or not isinstance(k, int):
        raise TypeError("m and k must be integers")
    if m < 1 or k < 1:
        raise ValueError(f"need m >= 1 and k >= 1, got m={m}, k={k}")


@dataclass(frozen=True)
class MultiplicityVector:
    """Sparse exponent vector ``{index: multiplicity}`` of one monomial.

    ``entries`` holds ``(index, multiplicity)`` pairs with strictly increasing
    indices and positive multiplicities; zero multiplicities are never stored.
    """

    m: int
    k: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = 0
        for i, n in self.entries:
            if i <= prev:
                raise ValueError(f"indices must be positive and strictly increasing: {self.entries}")
            if n < 1:
                raise ValueError(f"stored multiplicities must be >= 1: {self.entries}")
            prev = i
        if sum(n for _, n in self.entries) != self.k:
            raise ValueError(f"power sum of {self.entries} is not k={self.k}")
        if sum(i * n for i, n in self.entries) != self.m:
            raise ValueError(f"subscript sum of {self.entries} is not m={self.m}")
        if self.entries and self.entries[-1][0] > self.m - self.k + 1:
            raise ValueError(f"index {self.entries[-1][0]} exceeds m-k+1={self.m - self.k + 1}")

    @classmethod
    def from_partition(cls, parts) -> "MultiplicityVector":
        parts = tuple(parts)
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        return cls(sum(parts), len(parts), tuple(sorted(counts.items())))

    @classmethod
    def from_dict(cls, m: int, k: int, exps: dict[int, int]) -> "MultiplicityVector":
        return cls(m, k, tuple(sorted((int(i), int(n)) for i, n in exps.items() if n)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def partition(self) -> tuple[int, ...]:
        """The underlying partition of m, largest part first."""
        return tuple(i for i, n in reversed(self.entries) for _ in range(n))

    def dense(self, length: int | None = None) -> tuple[int, ...]:
        """``(n_1, ..., n_length)`` with zeros filled in."""
        length = self.m - self.k + 1 if length is None else length
        d = self.as_dict()
        return tuple(d.get(i, 0) for i in range(1, length + 1))

    def __getitem__(self, index: int) -> int:
        return self.as_dict().get(index, 0)

    def __str__(self):
        return "{" + ", ".join(f"n_{i}={n}" for i, n in self.entries) + "}"


def partitions(m: int, k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``m`` into exactly ``k`` parts no larger than ``largest``.

    Parts are non-increasing and the partitions come out in decreasing
    lexicographic order.
    """
    if largest is None:
        largest = m
    if k == 0:
        if m == 0:
            yield ()
        return
    # first part p must leave room for k-1 parts in [1, p]
    hi = min(largest, m - (k - 1))
    lo = -(-m // k)
    for p in range(hi, lo - 1, -1):
        for rest in partitions(m - p, k - 1, p):
            yield (p,) + rest


def enumerate_solutions(m: int, k: int) -> list[MultiplicityVector]:
    """All solutions of the reduced system over ``n_1 .. n_{m-k+1}``.

    Returned in canonical order (decreasing lexicographic order of the
    underlying partition).  Empty when ``k > m``.

    >>> [str(v) for v in enumerate_solutions(4, 2)]
    ['{n_1=1, n_3=1}', '{n_2=2}']
    """
    _check_mk(m, k)
    if k > m:
        return []
    return [MultiplicityVector.from_partition(p) for p in partitions(m, k, m - k + 1)]


def enumerate_full(m: int, k: int) -> list[MultiplicityVector]:
    """Brute-force solutions of the un-reduced system over ``n_1 .. n_m``.

    Walks every index from m down to 1 with no tail bound, so it shares no
    code with :func:`enumerate_solutions`.  Only used to confirm that the
    two systems have the same solution set.
    """
    _check_mk(m, k)
    found: list[dict[int, int]] = []

    def descend(i: int, power_left: int, weight_left: int, acc: dict[int, int]):
        if i == 0:
            if power_left == 0 and weight_left == 0:
                found.append(dict(acc))
            return
        for n in range(min(power_left, weight_left // i) + 1):
            if n:
                acc[i] = n
            descend(i - 1, power_left - n, weight_left - i * n, acc)
            acc.pop(i, None)

    descend(m, k, m, {})
    vectors = [MultiplicityVector.from_dict(m, k, d) for d in found]
    vectors.sort(key=MultiplicityVector.partition, reverse=True)
    return vectors


@lru_cache(maxsize=None)
def _at_most(n: int, parts: int) -> int:
    # partitions of n into at most `parts` parts, by coin-change over part sizes
    table = [1] + [0] * n
    for size in range(1, parts + 1):
        for total in range(size, n + 1):
            table[total] += table[total - size]
    return table[n]


def count(m: int, k: int) -> int:
    """Number of solutions, i.e. partitions of m into exactly k parts."""
    _check_mk(m, k)
    if k > m:
        return 0
    # strip one from every part: partitions of m-k into at most k parts
    return _at_most(m - k, k)
