"""Print the exact bound checks and the descriptive log log m(n) table side by side.

    python scripts/bound_chain.py --max-n 7
"""

import argparse
import math

from matroid_census.bounds import asymptotic_table, report_from_counts
from matroid_census.enumeration import count_all


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--max-n", type=int, default=7)
    args = p.parse_args()

    counts = count_all(args.max_n)
    report = report_from_counts(counts)
    by_name = {}
    for row in report.rows:
        by_name.setdefault(row.name, []).append(row)
    print(f"{'check':22s} {'rows':>5s} {'hold':>5s}  tightest")
    for name, rows in by_name.items():
        nonzero = [r for r in rows if r.lhs > 0]
        tight = min(nonzero, key=lambda r: math.log2(r.rhs) - math.log2(r.lhs)) if nonzero else rows[0]
        inst = ",".join(str(x) for x in (tight.n, tight.r, tight.t) if x is not None)
        print(f"{name:22s} {len(rows):5d} {sum(r.holds for r in rows):5d}  ({inst}) {tight.slack}")

    print()
    print(f"{'n':>2s} {'m_n':>8s} {'loglog m_n':>11s} {'n-1.5log n+loglog n':>20s} {'knuth shape':>12s}")
    for row in asymptotic_table(counts):
        print(f"{row.n:2d} {row.m_n:8d} {row.loglog_m_n:11.4f} {row.upper_shape:20.4f} {row.knuth_shape:12.4f}")
    print("\n(no verdict on the last table: both shapes hold only up to an additive constant)")


if __name__ == "__main__":
    main()
