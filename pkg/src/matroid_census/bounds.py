"""Exact checks of the counting inequalities behind the upper bound on m(n).

Every inequality of the form a*log(x) <= b*log(y) is checked as x**a <= y**b
on Python ints, so there is no tolerance anywhere in this module.  Each row
stores lhs <= rhs as its verdict.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Sequence

from .combinatorics import bell_number, binomial
from .enumeration import CountTable, count_all

CSV_FIELDS = ("name", "n", "r", "t", "lhs", "rhs", "holds", "slack")


@dataclass(frozen=True)
class BoundRow:
    name: str
    n: int
    r: int | None
    t: int | None
    lhs: int
    rhs: int
    holds: bool
    slack: str

    @property
    def sort_key(self) -> tuple:
        return (self.name, self.n, -1 if self.r is None else self.r, -1 if self.t is None else self.t)


def _log2(x: int) -> float:
    return math.log2(x) if x > 0 else float("-inf")


def _row(name: str, n: int, r: int | None, t: int | None, lhs: int, rhs: int, note: str = "") -> BoundRow:
    if lhs == rhs:
        slack = "equality"
    elif lhs <= 0:
        slack = "lhs=0"
    else:
        slack = f"log2(rhs/lhs)={_log2(rhs) - _log2(lhs):.6g}"
    if note:
        slack = f"{slack}; {note}"
    return BoundRow(name, n, r, t, lhs, rhs, lhs <= rhs, slack)


def verify_lemma2(counts: CountTable, n: int, r: int, t: int) -> BoundRow:
    """(m(n,r)+1)^C(n-t,r-t) <= (m(n-t,r-t)+1)^C(n,r)."""
    if not 0 <= t <= r <= n:
        raise ValueError(f"need 0 <= t <= r <= n, got ({n}, {r}, {t})")
    big, small = counts.m(n, r) + 1, counts.m(n - t, r - t) + 1
    return _row("lemma2", n, r, t, big ** binomial(n - t, r - t), small ** binomial(n, r))


def verify_lemma4(counts: CountTable, n: int) -> tuple[BoundRow, BoundRow]:
    """m(n,2)+1 <= B(n+1) (injection into partitions of n+1) and <= (n+1)^(n+1)."""
    size = counts.m(n, 2) + 1
    return (
        _row("lemma4.bell", n, 2, None, size, bell_number(n + 1)),
        _row("lemma4.crude", n, 2, None, size, (n + 1) ** (n + 1)),
    )


def verify_contraction_step(counts: CountTable, n: int, r: int) -> BoundRow:
    """m(n,r)^C(n-r+2,2) <= (m(n-r+2,2)+1)^C(n,r): contraction down to rank 2."""
    if not 2 <= r <= n:
        raise ValueError(f"contraction step needs 2 <= r <= n, got r={r}, n={n}")
    k = n - r + 2
    return _row(
        "theorem.contraction", n, r, r - 2,
        counts.m(n, r) ** binomial(k, 2), (counts.m(k, 2) + 1) ** binomial(n, r),
    )


def verify_theorem_bound(counts: CountTable, n: int, r: int) -> BoundRow:
    """log m(n,r) <= (2 log(n+1)/(n+2)) C(n+2,r), i.e. m^(n+2) <= (n+1)^(2 C(n+2,r))."""
    if r < 2:
        raise ValueError(f"the rank-2 reduction needs r >= 2, got r={r}")
    m = counts.m(n, r)
    if m < 1:
        raise ValueError(f"m({n},{r}) = 0 has no logarithm")
    return _row("theorem.bound", n, r, r - 2, m ** (n + 2), (n + 1) ** (2 * binomial(n + 2, r)))


def verify_knuth_lower(counts: CountTable, n: int) -> BoundRow:
    """2^C(n, n/2) <= m(n)^n; odd n uses floor(n/2) and says so in the slack."""
    if n < 1:
        raise ValueError("the lower bound needs n >= 1")
    note = "" if n % 2 == 0 else "interpretation: floor"
    return _row("knuth", n, None, None, 2 ** binomial(n, n // 2), counts.total(n) ** n, note)


def verify_final_count(counts: CountTable, n: int) -> tuple[BoundRow, BoundRow, BoundRow]:
    """m(n) = sum_r m(n,r); m(n) <= (n+1) max_r m(n,r); and the closing log bound.

    The last row is m(n)^(n+2) <= (n+1)^((n+2) + 2 C(n+2, floor((n+2)/2))).
    """
    per_rank = [counts.m(n, r) for r in range(n + 1)]
    total = counts.total(n)
    c = binomial(n + 2, (n + 2) // 2)
    return (
        _row("final.sum", n, None, None, total, sum(per_rank),
             "" if total == sum(per_rank) else "MISMATCH"),
        _row("final.max", n, None, None, total, (n + 1) * max(per_rank)),
        _row("final.chain", n, None, None, total ** (n + 2), (n + 1) ** ((n + 2) + 2 * c)),
    )


def verify_closed_forms(counts: CountTable, n: int) -> tuple[BoundRow, ...]:
    """m(n,0) = 1, m(n,n) = 1, m(n,1) = 2^n - 1, each stored as a two-sided check."""
    rows = []
    for name, r, expected in (("closed.r0", 0, 1), ("closed.rn", n, 1), ("closed.r1", 1, 2**n - 1)):
        got = counts.m(n, r)
        row = _row(name, n, r, None, got, expected)
        rows.append(BoundRow(**{**asdict(row), "holds": got == expected}))
    return tuple(rows)


@dataclass(frozen=True)
class BoundReport:
    max_n: int
    rows: tuple[BoundRow, ...]

    @property
    def all_hold(self) -> bool:
        return all(row.holds for row in self.rows)

    def failures(self) -> list[BoundRow]:
        return [row for row in self.rows if not row.holds]

    def select(self, name: str) -> list[BoundRow]:
        return [row for row in self.rows if row.name == name]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for row in self.rows:
            w.writerow([
                row.name, row.n, "" if row.r is None else row.r, "" if row.t is None else row.t,
                row.lhs, row.rhs, "true" if row.holds else "false", row.slack,
            ])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"max_n": self.max_n, "all_hold": self.all_hold, "rows": [asdict(row) for row in self.rows]},
            indent=2,
        ) + "\n"


def report_from_counts(counts: CountTable, max_n: int | None = None) -> BoundReport:
    max_n = counts.max_n if max_n is None else max_n
    rows: list[BoundRow] = []
    for n in range(max_n + 1):
        rows.extend(verify_closed_forms(counts, n))
        for r in range(n + 1):
            for t in range(r + 1):
                rows.append(verify_lemma2(counts, n, r, t))
        rows.extend(verify_lemma4(counts, n))
        for r in range(2, n + 1):
            rows.append(verify_contraction_step(counts, n, r))
            rows.append(verify_theorem_bound(counts, n, r))
        if n >= 1:
            rows.append(verify_knuth_lower(counts, n))
        rows.extend(verify_final_count(counts, n))
    rows.sort(key=lambda row: row.sort_key)
    return BoundReport(max_n, tuple(rows))


def full_report(max_n: int, workers: int | None = None) -> BoundReport:
    return report_from_counts(count_all(max_n, workers=workers))


def expected_row_count(max_n: int) -> int:
    """Closed form for len(full_report(max_n).rows)."""
    N = max_n
    lemma2 = (N + 1) * (N + 2) * (N + 3) // 6
    rank2_steps = 2 * (N - 1) * N // 2 if N >= 2 else 0
    per_n = 3 + 2 + 3  # closed forms, lemma4 pair, final triple
    return per_n * (N + 1) + lemma2 + rank2_steps + N


# -- descriptive asymptotics (no verdict) ------------------------------------


@dataclass(frozen=True)
class AsymptoticRow:
    n: int
    m_n: int
    loglog_m_n: float
    upper_shape: float
    knuth_shape: float

    @property
    def gap(self) -> float:
        return self.upper_shape - self.loglog_m_n


def asymptotic_table(counts: CountTable) -> list[AsymptoticRow]:
    """log log m(n) next to n - 1.5 log n + log log n and log log of the Knuth lower bound.

    Both expressions carry an unspecified O(1); the table is for inspection only.
    """
    rows = []
    for n in range(2, counts.max_n + 1):
        m = counts.total(n)
        upper = n - 1.5 * math.log2(n) + math.log2(math.log2(n))
        knuth = math.log2(binomial(n, n // 2) / n)
        rows.append(AsymptoticRow(n, m, math.log2(math.log2(m)), upper, knuth))
    return rows


def asymptotic_rows_as_dicts(rows: Sequence[AsymptoticRow]) -> list[dict]:
    return [{**asdict(row), "gap": row.gap} for row in rows]
