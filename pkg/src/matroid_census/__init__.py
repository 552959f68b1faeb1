"""Exhaustive matroid censuses on small labeled ground sets and exact checks of
the entropy-based upper bound on the number of matroids."""

from .combinatorics import SetPartition, SubsetCode, bell_number, binomial, colex_rank, colex_unrank, enumerate_partitions
from .matroid import (
    BasisFamily,
    Rank2Decomposition,
    compose_rank2,
    contract,
    decompose_rank2,
    exchange_witness,
    is_base_exchange,
)
from .enumeration import Census, CountTable, count_all, enumerate_dfs, enumerate_naive, read_census, write_census
from .entropy import FiniteDistribution, entropy, project_distribution, shearer_check, uniform_census_variable
from .bounds import BoundReport, full_report

__all__ = [
    "SetPartition", "SubsetCode", "bell_number", "binomial", "colex_rank", "colex_unrank",
    "enumerate_partitions", "BasisFamily", "Rank2Decomposition", "compose_rank2", "contract",
    "decompose_rank2", "exchange_witness", "is_base_exchange", "Census", "CountTable", "count_all",
    "enumerate_dfs", "enumerate_naive", "read_census", "write_census", "FiniteDistribution",
    "entropy", "project_distribution", "shearer_check", "uniform_census_variable", "BoundReport",
    "full_report",
]
