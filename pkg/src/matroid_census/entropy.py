"""Entropy of the uniform census variable and of its projections onto the
coordinates containing a fixed set T, and Shearer's inequality for the cover
{A(T) : |T| = t} of the r-subsets."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping

from .combinatorics import binomial, colex_subsets
from .enumeration import Census
from .matroid import contraction_coordinates, project_bits

TOLERANCE = 1e-9


@dataclass(frozen=True)
class FiniteDistribution:
    weights: Mapping[Hashable, Fraction | float]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights.values()):
            raise ValueError("negative probability")
        if abs(float(sum(self.weights.values())) - 1.0) > 1e-12:
            raise ValueError("probabilities do not sum to 1")

    @classmethod
    def from_counts(cls, counts: Mapping[Hashable, int]) -> "FiniteDistribution":
        total = sum(counts.values())
        if total <= 0:
            raise ValueError("no mass to normalise")
        return cls({k: Fraction(c, total) for k, c in counts.items()})

    @property
    def support(self) -> frozenset:
        return frozenset(k for k, w in self.weights.items() if w > 0)


def entropy(dist: FiniteDistribution) -> float:
    """Shannon entropy in bits; zero-probability outcomes contribute nothing."""
    h = 0.0
    for w in dist.weights.values():
        if w > 0:
            p = float(w)
            h -= p * math.log2(p)
    return max(h, 0.0)


def uniform_census_variable(census: Census) -> FiniteDistribution:
    if not census.codes:
        raise ValueError("empty census")
    return FiniteDistribution.from_counts(Counter(census.codes))


def project_distribution(census: Census, t_set: Iterable[int]) -> FiniteDistribution:
    """Law of a uniform census member restricted to the coordinates whose subsets contain T.

    Keys are the projected bit patterns in contracted colex coordinates.
    """
    t = frozenset(t_set)
    if len(t) > census.r:
        raise ValueError(f"|T| = {len(t)} exceeds r = {census.r}")
    if any(not 0 <= x < census.n for x in t):
        raise ValueError(f"T = {sorted(t)} not inside range({census.n})")
    if not census.codes:
        raise ValueError("empty census")
    coords = contraction_coordinates(census.n, census.r, t)
    return FiniteDistribution.from_counts(Counter(project_bits(c, coords) for c in census.codes))


@dataclass(frozen=True)
class CoverFamily:
    universe_size: int
    members: tuple[frozenset[int], ...]
    multiplicity: int

    def __post_init__(self) -> None:
        hits = coverage(self.universe_size, self.members)
        if hits and min(hits) < self.multiplicity:
            raise ValueError(f"some coordinate is covered fewer than {self.multiplicity} times")


def coverage(p: int, members: Iterable[frozenset[int]]) -> list[int]:
    hits = [0] * p
    for a in members:
        for x in a:
            hits[x] += 1
    return hits


def contraction_cover(n: int, r: int, t: int) -> tuple[tuple[tuple[int, ...], ...], CoverFamily]:
    """The t-sets T in colex order and the cover A(T) = {S : T <= S} of the r-subsets.

    Each coordinate's multiplicity is counted directly; the cover is only built if
    every r-subset lies in exactly C(r, t) members.
    """
    if not 0 <= t <= r <= n:
        raise ValueError(f"need 0 <= t <= r <= n, got t={t}, r={r}, n={n}")
    t_sets = colex_subsets(n, t)
    members = tuple(frozenset(contraction_coordinates(n, r, frozenset(T))) for T in t_sets)
    k = binomial(r, t)
    hits = coverage(binomial(n, r), members)
    if any(h != k for h in hits):
        raise AssertionError(f"cover multiplicities {sorted(set(hits))} != {{{k}}}")
    return t_sets, CoverFamily(binomial(n, r), members, k)


@dataclass(frozen=True)
class ShearerRecord:
    n: int
    r: int
    t: int
    lhs: float
    rhs: float
    holds: bool

    def as_dict(self) -> dict:
        return {"n": self.n, "r": self.r, "t": self.t, "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def shearer_check(census: Census, t: int) -> ShearerRecord:
    """H(X) against (1/C(r,t)) * sum over t-sets T of H(X restricted to A(T))."""
    if not 0 <= t <= census.r:
        raise ValueError(f"t = {t} outside [0, r={census.r}]")
    t_sets, cover = contraction_cover(census.n, census.r, t)
    lhs = entropy(uniform_census_variable(census))
    total = math.fsum(entropy(project_distribution(census, T)) for T in t_sets)
    rhs = total / cover.multiplicity
    return ShearerRecord(census.n, census.r, t, lhs, rhs, lhs <= rhs + TOLERANCE)
