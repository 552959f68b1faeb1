import io
import itertools
import random

import pytest

from matroid_census.combinatorics import binomial, colex_index, colex_subsets
from matroid_census.enumeration import (
    Census,
    CensusFormatError,
    count_all,
    enumerate_census,
    enumerate_dfs,
    enumerate_naive,
    format_census,
    read_census,
    write_census,
)
from matroid_census.matroid import BasisFamily, is_base_exchange, rank2_count_via_partitions

from .conftest import census

# (6, 3) runs in the acceptance suite
NAIVE_CASES = [(n, r) for n in range(7) for r in range(n + 1) if binomial(n, r) <= 20 and (n, r) != (6, 3)]


def test_naive_examples():
    assert len(enumerate_naive(3, 2)) == 8
    assert len(enumerate_naive(4, 2)) == 37
    for n in range(5):
        assert enumerate_naive(n, 0).codes == (0, 1)


def test_naive_refuses_large():
    with pytest.raises(ValueError):
        enumerate_naive(7, 3)


def test_census_invariants():
    for n in range(6):
        for r in range(n + 1):
            c = census(n, r)
            assert c.codes[0] == 0
            assert all(a < b for a, b in zip(c.codes, c.codes[1:]))
            assert all(is_base_exchange(f) for f in c.families)


@pytest.mark.parametrize("n,r", NAIVE_CASES)
def test_dfs_matches_naive(n, r):
    assert enumerate_dfs(n, r).codes == enumerate_naive(n, r).codes


def test_rank1_every_vector():
    for n in range(1, 8):
        c = census(n, 1)
        assert c.codes == tuple(range(1 << n))


def test_rank2_matches_partition_count():
    for n in range(8):
        assert len(census(n, 2)) == rank2_count_via_partitions(n)


def test_relabeling_invariance():
    for n in range(6):
        for r in range(n + 1):
            c = census(n, r)
            codes = set(c.codes)
            subsets = colex_subsets(n, r)
            index = colex_index(n, r)
            perms = list(itertools.permutations(range(n)))
            for perm in random.Random(n * 10 + r).sample(perms, min(len(perms), 6)):
                moved = set()
                for code in c.codes:
                    out = 0
                    for k in BasisFamily(n, r, code).ranks():
                        out |= 1 << index[frozenset(perm[x] for x in subsets[k])]
                    moved.add(out)
                assert moved == codes


def test_count_table(counts6):
    assert counts6.totals[3] == 16
    assert counts6.totals[4] == 68
    assert counts6.entries[(5, 1)] == 31
    assert [counts6.totals[n] for n in range(7)] == [1, 2, 5, 16, 68, 406, 3807]
    for n in range(7):
        assert counts6.totals[n] == sum(counts6.entries[(n, r)] for r in range(n + 1))
        assert counts6.entries[(n, 0)] == counts6.entries[(n, n)] == 1
        assert counts6.m(n, 1) == 2**n - 1
    assert counts6.m(1, 2) == 0
    with pytest.raises(KeyError):
        counts6.m(7, 3)


def test_count_all_budget():
    with pytest.raises(ValueError):
        count_all(8)


def test_parallel_matches_serial():
    serial = enumerate_dfs(6, 3, workers=1)
    parallel = enumerate_dfs(6, 3, workers=2, split_depth=6)
    assert serial.codes == parallel.codes


def test_unknown_method():
    with pytest.raises(ValueError):
        enumerate_census(3, 2, "bfs")


def test_census_file_round_trip():
    for n in range(6):
        for r in range(n + 1):
            c = census(n, r)
            text = format_census(c)
            back = read_census(io.StringIO(text))
            assert back == c
            buf = io.StringIO()
            write_census(back, buf)
            assert buf.getvalue() == text


def test_census_file_layout():
    text = format_census(enumerate_naive(3, 2))
    lines = text.splitlines()
    assert lines[0] == "matroid-census v1 n=3 r=2 order=colex count=8"
    assert lines[1:] == [str(k) for k in range(8)]
    lines = format_census(census(5, 2)).splitlines()
    assert all(len(row) == 3 for row in lines[1:])  # ceil(10 / 4)
    assert lines[-1] == "3ff"


def test_census_with_no_coordinates():
    c = enumerate_dfs(1, 2)
    assert c.codes == (0,)
    assert read_census(io.StringIO(format_census(c))) == c


HEADER = "matroid-census v1 n=4 r=2 order=colex count={}\n"


@pytest.mark.parametrize(
    "text",
    [
        "",
        "matroid-census v2 n=4 r=2 order=colex count=1\n00\n",
        "matroid-census v1 n=4 r=2 order=lex count=1\n00\n",
        "matroid-census v1 n=4 r=2 count=1\n00\n",
        "matroid-census v1 n=4 r=x order=colex count=1\n00\n",
        HEADER.format(2) + "00\n",
        HEADER.format(1) + "0\n",
        HEADER.format(1) + "000\n",
        HEADER.format(1) + "0G\n",
        HEADER.format(1) + "0A\n",
        HEADER.format(1) + "40\n",
        HEADER.format(2) + "01\n00\n",
        HEADER.format(2) + "01\n01\n",
        HEADER.format(2) + "00\n0c\n",
        HEADER.format(1) + "01\n",
    ],
)
def test_read_rejects(text):
    with pytest.raises(CensusFormatError):
        read_census(io.StringIO(text))


def test_read_reports_line_of_tampered_row():
    c = census(4, 2)
    assert 0x0C not in c.codes  # {03,12}: colex bits 3 and 2
    # equal-width hex sorts like the integers it encodes
    rows = sorted(set(format_census(c).splitlines()[1:]) | {"0c"})
    bad = "\n".join([HEADER.format(len(rows)).strip()] + rows) + "\n"
    with pytest.raises(CensusFormatError) as exc:
        read_census(io.StringIO(bad))
    assert exc.value.line == 2 + rows.index("0c")


def test_census_equality_ignores_method():
    assert Census(3, 2, (0, 1), "naive") == Census(3, 2, (0, 1), "dfs")
