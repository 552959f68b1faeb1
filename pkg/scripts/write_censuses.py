"""Write every census file for n <= MAX_N into a directory, plus counts.json.

    python scripts/write_censuses.py out/ --max-n 7 --workers 2
"""

import argparse
import json
import logging
import time
from pathlib import Path

from matroid_census.enumeration import enumerate_dfs, format_census

log = logging.getLogger("write_censuses")


def main():
    p = argparse.ArgumentParser()
    p.add_argument("outdir", type=Path)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    args.outdir.mkdir(parents=True, exist_ok=True)
    counts = {}
    for n in range(args.max_n + 1):
        for r in range(n + 1):
            t0 = time.perf_counter()
            census = enumerate_dfs(n, r, workers=args.workers)
            (args.outdir / f"census_n{n}_r{r}.txt").write_text(format_census(census))
            counts[f"{n},{r}"] = census.matroid_count
            log.info("n=%d r=%d m=%d (%.2fs)", n, r, census.matroid_count, time.perf_counter() - t0)
    totals = {n: sum(counts[f"{n},{r}"] for r in range(n + 1)) for n in range(args.max_n + 1)}
    (args.outdir / "counts.json").write_text(json.dumps({"m_nr": counts, "m_n": totals}, indent=2) + "\n")
    log.info("m_n: %s", totals)


if __name__ == "__main__":
    main()
