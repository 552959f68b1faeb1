import csv
import io
import json

import pytest

from matroid_census.bounds import (
    BoundRow,
    asymptotic_table,
    expected_row_count,
    report_from_counts,
    verify_contraction_step,
    verify_final_count,
    verify_knuth_lower,
    verify_lemma2,
    verify_lemma4,
    verify_theorem_bound,
)
from matroid_census.enumeration import CountTable


def test_lemma2_examples(counts6):
    row = verify_lemma2(counts6, 3, 2, 1)
    assert (row.lhs, row.rhs, row.holds, row.slack) == (64, 64, True, "equality")
    row = verify_lemma2(counts6, 4, 2, 1)
    assert (row.lhs, row.rhs) == (37**3, 8**6) == (50653, 262144)
    assert row.holds
    for n, r in [(2, 1), (5, 3), (6, 6)]:
        row = verify_lemma2(counts6, n, r, 0)
        assert row.lhs == row.rhs and row.holds
    with pytest.raises(ValueError):
        verify_lemma2(counts6, 3, 2, 3)
    with pytest.raises(KeyError):
        verify_lemma2(counts6, 7, 2, 1)


def test_lemma4_examples(counts6):
    bell, crude = verify_lemma4(counts6, 3)
    assert (bell.lhs, bell.rhs, crude.rhs) == (8, 15, 256)
    bell, crude = verify_lemma4(counts6, 4)
    assert (bell.lhs, bell.rhs, crude.rhs) == (37, 52, 5**5)
    bell, _ = verify_lemma4(counts6, 1)
    assert (bell.lhs, bell.rhs, bell.holds) == (1, 2, True)


def test_theorem_examples(counts6):
    row = verify_theorem_bound(counts6, 4, 2)
    assert (row.lhs, row.rhs, row.holds) == (36**6, 5**30, True)
    row = verify_theorem_bound(counts6, 3, 2)
    assert (row.lhs, row.rhs) == (16807, 4**20)
    assert verify_theorem_bound(counts6, 5, 5).lhs == 1
    with pytest.raises(ValueError):
        verify_theorem_bound(counts6, 4, 1)


def test_contraction_step(counts6):
    row = verify_contraction_step(counts6, 5, 3)
    # k = n - r + 2 = 4: m(5,3)^C(4,2) <= (m(4,2)+1)^C(5,3)
    assert (row.lhs, row.rhs, row.holds) == (171**6, 37**10, True)


def test_knuth_examples(counts6):
    row = verify_knuth_lower(counts6, 4)
    assert (row.lhs, row.rhs, row.holds) == (64, 68**4, True)
    row = verify_knuth_lower(counts6, 2)
    assert (row.lhs, row.rhs, row.holds) == (4, 25, True)
    row = verify_knuth_lower(counts6, 6)
    assert (row.lhs, row.rhs, row.holds) == (2**20, 3807**6, True)
    assert "floor" in verify_knuth_lower(counts6, 5).slack
    assert "floor" not in row.slack


def test_final_count_examples(counts6):
    total, mx, chain = verify_final_count(counts6, 4)
    assert (total.lhs, total.rhs) == (68, 68)
    assert (mx.lhs, mx.rhs) == (68, 180)
    assert chain.holds
    _, mx, _ = verify_final_count(counts6, 3)
    assert (mx.lhs, mx.rhs) == (16, 28)
    total, mx, chain = verify_final_count(counts6, 0)
    assert (total.lhs, mx.lhs, mx.rhs) == (1, 1, 1)
    assert all(r.holds for r in (total, mx, chain))


def test_failing_row_is_reported():
    bogus = CountTable(2, {(0, 0): 1, (1, 0): 1, (1, 1): 1, (2, 0): 1, (2, 1): 3, (2, 2): 1}, {0: 1, 1: 2, 2: 99})
    report = report_from_counts(bogus)
    names = {row.name for row in report.failures()}
    assert "final.sum" in names and not report.all_hold


def admissible_instances(max_n):
    rows = []
    for n in range(max_n + 1):
        rows += [("closed", n)] * 3 + [("lemma4", n)] * 2 + [("final", n)] * 3
        rows += [("lemma2", n, r, t) for r in range(n + 1) for t in range(r + 1)]
        rows += [("theorem", n, r, k) for r in range(2, n + 1) for k in range(2)]
        rows += [("knuth", n)] if n >= 1 else []
    return len(rows)


def test_report_totality(counts6):
    for max_n in range(7):
        report = report_from_counts(counts6, max_n)
        assert len(report.rows) == expected_row_count(max_n) == admissible_instances(max_n)
        assert report.all_hold


def test_report_small_cases(counts6):
    report = report_from_counts(counts6, 2)
    keys = {(row.name, row.n, row.r, row.t) for row in report.rows}
    assert ("lemma2", 2, 1, 0) in keys and ("closed.rn", 2, 2, None) in keys
    report = report_from_counts(counts6, 5)
    lemma2 = report.select("lemma2")
    assert len([row for row in lemma2 if row.t >= 1]) == 35
    assert len([row for row in lemma2 if row.n == 5]) == 21


def test_rows_are_exact_and_reproducible(counts6):
    for row in report_from_counts(counts6).rows:
        assert type(row.lhs) is int and type(row.rhs) is int
        assert row.holds == (row.lhs <= row.rhs) or row.name.startswith("closed")


def test_rows_sorted(counts6):
    rows = report_from_counts(counts6).rows
    assert list(rows) == sorted(rows, key=lambda row: row.sort_key)


def test_csv_and_json(counts6):
    report = report_from_counts(counts6, 4)
    parsed = list(csv.DictReader(io.StringIO(report.to_csv())))
    assert list(parsed[0]) == ["name", "n", "r", "t", "lhs", "rhs", "holds", "slack"]
    assert len(parsed) == len(report.rows)
    assert {p["holds"] for p in parsed} == {"true"}
    eq = [p for p in parsed if (p["name"], p["n"], p["r"], p["t"]) == ("lemma2", "3", "2", "1")]
    assert eq[0]["lhs"] == eq[0]["rhs"] == "64"
    data = json.loads(report.to_json())
    assert data["all_hold"] is True
    assert BoundRow(**data["rows"][0]) == report.rows[0]


def test_asymptotic_table(counts6):
    rows = asymptotic_table(counts6)
    assert [r.n for r in rows] == [2, 3, 4, 5, 6]
    assert rows[1].loglog_m_n == pytest.approx(2.0)  # m_3 = 16
    assert rows[2].upper_shape == pytest.approx(2.0)  # 4 - 3 + 1
