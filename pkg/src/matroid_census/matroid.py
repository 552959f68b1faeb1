"""Basis families as colex-indexed bit vectors, the exchange axiom, contraction,
and the rank-2 loops/parallel-class decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple

from .combinatorics import SetPartition, binomial, colex_index, colex_subsets, enumerate_partitions


def iter_bits(bits: int) -> Iterator[int]:
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, order=True)
class BasisFamily:
    """A set of r-subsets of {0..n-1}; bit k of ``bits`` marks the k-th subset in colex order."""

    n: int
    r: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.n < 0 or self.r < 0:
            raise ValueError(f"negative n or r: ({self.n}, {self.r})")
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bit vector does not fit in C({self.n},{self.r}) = {self.width} bits")

    @property
    def width(self) -> int:
        return binomial(self.n, self.r)

    @classmethod
    def from_members(cls, n: int, r: int, members: Iterable[Iterable[int]]) -> "BasisFamily":
        index = colex_index(n, r)
        bits = 0
        for m in members:
            key = frozenset(m)
            if key not in index:
                raise ValueError(f"{sorted(key)} is not a {r}-subset of range({n})")
            bits |= 1 << index[key]
        return cls(n, r, bits)

    def ranks(self) -> Iterator[int]:
        """Colex ranks of the members, ascending."""
        return iter_bits(self.bits)

    def members(self) -> list[tuple[int, ...]]:
        subsets = colex_subsets(self.n, self.r)
        return [subsets[k] for k in self.ranks()]

    def __contains__(self, subset: Iterable[int]) -> bool:
        k = colex_index(self.n, self.r).get(frozenset(subset))
        return k is not None and bool(self.bits >> k & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __repr__(self) -> str:
        return f"BasisFamily(n={self.n}, r={self.r}, members={self.members()})"


class ExchangeViolation(NamedTuple):
    basis: tuple[int, ...]
    other: tuple[int, ...]
    element: int


@lru_cache(maxsize=None)
def exchange_table(n: int, r: int) -> tuple[tuple[tuple[tuple[int, int], ...], ...], ...]:
    """table[i][j] = ((e, mask), ...) for e in B_i - B_j, ascending in e.

    ``mask`` has a bit for every B_i - e + f with f in B_j - B_i; the pair (B_i, B_j)
    satisfies the axiom at e iff the family meets ``mask``.
    """
    subsets = colex_subsets(n, r)
    index = colex_index(n, r)
    table = []
    for bi in subsets:
        si = frozenset(bi)
        row = []
        for bj in subsets:
            sj = frozenset(bj)
            entries = []
            if si != sj:
                for e in sorted(si - sj):
                    mask = 0
                    for f in sj - si:
                        mask |= 1 << index[(si - {e}) | {f}]
                    entries.append((e, mask))
            row.append(tuple(entries))
        table.append(tuple(row))
    return tuple(table)


def _first_violation(n: int, r: int, bits: int) -> tuple[int, int, int] | None:
    table = exchange_table(n, r)
    members = list(iter_bits(bits))
    for i in members:
        row = table[i]
        for j in members:
            for e, mask in row[j]:
                if not bits & mask:
                    return i, j, e
    return None


def is_base_exchange(family: BasisFamily) -> bool:
    """True iff the family satisfies the base exchange axiom (vacuously for <= 1 member)."""
    return _first_violation(family.n, family.r, family.bits) is None


def exchange_witness(family: BasisFamily) -> ExchangeViolation | None:
    """Smallest violating (B, B', e) ordered by (colex rank of B, colex rank of B', e)."""
    hit = _first_violation(family.n, family.r, family.bits)
    if hit is None:
        return None
    i, j, e = hit
    subsets = colex_subsets(family.n, family.r)
    return ExchangeViolation(subsets[i], subsets[j], e)


@lru_cache(maxsize=None)
def contraction_coordinates(n: int, r: int, t_set: frozenset[int]) -> tuple[int, ...]:
    """Colex ranks of the r-subsets containing t_set, in ascending order.

    Position k in the result is the colex rank of the k-th (r-t)-subset of the
    contracted ground set: removing T and renumbering preserves colex order.
    """
    return tuple(k for k, s in enumerate(colex_subsets(n, r)) if t_set.issubset(s))


def _check_t_set(family: BasisFamily, t_set: Iterable[int]) -> frozenset[int]:
    t = frozenset(t_set)
    if len(t) > family.r:
        raise ValueError(f"|T| = {len(t)} exceeds rank {family.r}")
    if any(not 0 <= x < family.n for x in t):
        raise ValueError(f"T = {sorted(t)} not inside range({family.n})")
    return t


def project_bits(bits: int, coords: tuple[int, ...]) -> int:
    out = 0
    for pos, k in enumerate(coords):
        if bits >> k & 1:
            out |= 1 << pos
    return out


def contract(family: BasisFamily, t_set: Iterable[int]) -> BasisFamily:
    """B/T = {B - T : T <= B in family}, on the renumbered ground set E - T."""
    t = _check_t_set(family, t_set)
    n, r = family.n - len(t), family.r - len(t)
    coords = contraction_coordinates(family.n, family.r, t)
    return BasisFamily(n, r, project_bits(family.bits, coords))


def contract_by_definition(family: BasisFamily, t_set: Iterable[int]) -> BasisFamily:
    """Set-level contraction, kept as the reference for contract()."""
    t = _check_t_set(family, t_set)
    keep = [x for x in range(family.n) if x not in t]
    relabel = {x: i for i, x in enumerate(keep)}
    members = [[relabel[x] for x in b if x not in t] for b in family.members() if t.issubset(b)]
    return BasisFamily.from_members(len(keep), family.r - len(t), members)


@dataclass(frozen=True)
class Rank2Decomposition:
    loops: frozenset[int]
    blocks: SetPartition

    def __post_init__(self) -> None:
        if self.loops & self.blocks.universe:
            raise ValueError("loops overlap the partitioned elements")


def decompose_rank2(family: BasisFamily) -> Rank2Decomposition:
    """Loops E0 plus the parallel classes (e ~ f iff ef is not a basis) of the rest."""
    if family.r != 2:
        raise ValueError(f"rank-2 decomposition needs r = 2, got r = {family.r}")
    hit = exchange_witness(family)
    if hit is not None:
        raise ValueError(f"family violates the exchange axiom at {hit}")
    covered: set[int] = set()
    for b in family.members():
        covered.update(b)
    loops = frozenset(range(family.n)) - covered
    rest = sorted(covered)
    blocks: list[frozenset[int]] = []
    assigned: set[int] = set()
    for e in rest:
        if e in assigned:
            continue
        block = frozenset([e] + [f for f in rest if f != e and (e, f) not in family])
        blocks.append(block)
        assigned |= block
    return Rank2Decomposition(loops, SetPartition.of(blocks, rest))


def compose_rank2(decomposition: Rank2Decomposition, n: int) -> BasisFamily:
    """All pairs {e1, e2} with e1, e2 in distinct non-loop blocks."""
    uni = decomposition.loops | decomposition.blocks.universe
    if uni != frozenset(range(n)):
        raise ValueError(f"decomposition does not partition range({n})")
    block_of = {e: k for k, b in enumerate(decomposition.blocks.blocks) for e in b}
    members = [
        (a, b)
        for a in block_of
        for b in block_of
        if a < b and block_of[a] != block_of[b]
    ]
    return BasisFamily.from_members(n, 2, members)


def rank2_count_via_partitions(n: int) -> int:
    """|M_{[n],2}| counted from the decomposition side, independently of any enumerator.

    1 for the empty family, plus one family per (E0, partition of the rest into
    at least two blocks).
    """
    total = 1
    for k in range(n + 1):
        for rest in combinations(range(n), n - k):
            total += sum(1 for p in enumerate_partitions(rest) if len(p) >= 2)
    return total
