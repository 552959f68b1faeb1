"""Exact combinatorial primitives on the ground set {0, ..., n-1}.

Subsets of a fixed size are indexed in colexicographic order, so the rank of a
subset does not depend on n.  All counts are Python ints (arbitrary precision).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs n, k >= 0, got ({n}, {k})")
    if k > n:
        return 0
    return _binomial(n, k)


@lru_cache(maxsize=None)
def _binomial(n: int, k: int) -> int:
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


@dataclass(frozen=True)
class SubsetCode:
    n: int
    r: int
    rank: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.n < 0:
            raise ValueError(f"negative size in {self}")
        if not 0 <= self.rank < binomial(self.n, self.r):
            raise ValueError(
                f"rank {self.rank} out of range [0, C({self.n},{self.r}))"
            )


def colex_rank(subset: Iterable[int], n: int) -> SubsetCode:
    """Rank of a subset among all subsets of its size: sum of C(s_i, i)."""
    elems = list(subset)
    for a, b in zip(elems, elems[1:]):
        if a == b:
            raise ValueError(f"duplicate element {a}")
        if a > b:
            raise ValueError(f"subset not strictly increasing: {elems}")
    if elems and (elems[0] < 0 or elems[-1] >= n):
        raise ValueError(f"element out of range for n={n}: {elems}")
    rank = sum(binomial(s, i) for i, s in enumerate(elems, start=1))
    return SubsetCode(n, len(elems), rank)


def colex_unrank(code: SubsetCode) -> list[int]:
    """Inverse of colex_rank (greedy from the largest element down)."""
    rank, out = code.rank, []
    hi = code.n - 1
    for i in range(code.r, 0, -1):
        # largest s with C(s, i) <= rank
        s = hi
        while binomial(s, i) > rank:
            s -= 1
        out.append(s)
        rank -= binomial(s, i)
        hi = s - 1
    out.reverse()
    return out


@lru_cache(maxsize=None)
def colex_subsets(n: int, r: int) -> tuple[tuple[int, ...], ...]:
    """All r-subsets of {0..n-1} listed in colex order (index == colex rank)."""
    return tuple(tuple(colex_unrank(SubsetCode(n, r, k))) for k in range(binomial(n, r)))


@lru_cache(maxsize=None)
def colex_index(n: int, r: int) -> dict[frozenset[int], int]:
    return {frozenset(s): k for k, s in enumerate(colex_subsets(n, r))}


def bell_number(n: int) -> int:
    """Number of set partitions of an n-set, via the Bell triangle."""
    if n < 0:
        raise ValueError("bell_number needs n >= 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


@dataclass(frozen=True)
class SetPartition:
    blocks: tuple[frozenset[int], ...]
    universe: frozenset[int]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block in partition")
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= b
        if seen != set(self.universe):
            raise ValueError("blocks do not cover the universe")

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]], universe: Iterable[int] | None = None) -> "SetPartition":
        bs = [frozenset(b) for b in blocks]
        uni = frozenset().union(*bs) if universe is None else frozenset(universe)
        return cls(tuple(sorted(bs, key=lambda b: min(b))), uni)

    def __len__(self) -> int:
        return len(self.blocks)


def _partitions(elems: Sequence[int]) -> Iterator[list[list[int]]]:
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in _partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def enumerate_partitions(universe: Iterable[int]) -> Iterator[SetPartition]:
    """Every partition of the universe, each exactly once."""
    elems = sorted(set(universe))
    uni = frozenset(elems)
    for blocks in _partitions(elems):
        yield SetPartition.of(blocks, uni)
