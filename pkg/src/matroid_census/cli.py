"""Command-line front end.

Exit status: 0 success, 1 a verification failed (bad census row, bound that does
not hold), 2 usage error (bad arguments, unreadable or unwritable path).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import IO, Sequence

from .bounds import asymptotic_rows_as_dicts, asymptotic_table, full_report
from .combinatorics import bell_number, binomial
from .entropy import shearer_check
from .enumeration import (
    COUNT_MAX_N,
    NAIVE_MAX_WIDTH,
    CensusFormatError,
    count_all,
    default_workers,
    enumerate_census,
    enumerate_dfs,
    format_census,
    read_census,
)
from .matroid import BasisFamily, compose_rank2, decompose_rank2, exchange_witness, rank2_count_via_partitions

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_N = 8
COMMANDS = ("census", "counts", "verify", "shearer", "rank2", "bounds", "report")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    r: int | None = None
    t: int | None = None
    max_n: int | None = None
    method: str = "dfs"
    in_path: str | None = None
    out_path: str | None = None
    format: str = "json"
    workers: int = 1

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.workers < 1:
            raise UsageError("--workers must be >= 1")
        if self.n is not None and not 0 <= self.n <= MAX_N:
            raise UsageError(f"--n must be in [0, {MAX_N}]")
        if self.r is not None and self.n is not None and not 0 <= self.r <= self.n:
            raise UsageError("--r must be in [0, n]")
        if self.t is not None and self.r is not None and not 0 <= self.t <= self.r:
            raise UsageError("--t must be in [0, r]")
        if self.max_n is not None and not 0 <= self.max_n <= COUNT_MAX_N:
            raise UsageError(f"--max-n must be in [0, {COUNT_MAX_N}]")
        if self.command == "census" and self.method == "naive":
            if binomial(self.n, self.r) > NAIVE_MAX_WIDTH:
                raise UsageError(f"naive method needs C(n,r) <= {NAIVE_MAX_WIDTH}")
        if self.command == "shearer" and self.n is not None and self.n > 6:
            raise UsageError("shearer is limited to n <= 6")
        if self.command == "rank2" and self.n is not None and self.n > COUNT_MAX_N:
            raise UsageError(f"rank2 is limited to n <= {COUNT_MAX_N}")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroid-census", description=__doc__.splitlines()[0])
    p.add_argument("--workers", type=int, default=None,
                   help="enumeration worker processes (default: $MATROID_CENSUS_WORKERS or 1)")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", help="enumerate M_{[n],r} and write a census file")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--method", choices=("naive", "dfs"), default="dfs")
    c.add_argument("--out", dest="out_path")

    c = sub.add_parser("counts", help="table of m(n,r) and m(n)")
    c.add_argument("--max-n", type=int, required=True)

    c = sub.add_parser("verify", help="re-check every row of a census file")
    c.add_argument("--in", dest="in_path", required=True)

    c = sub.add_parser("shearer", help="entropy inequality over the A(T) cover")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--t", type=int, required=True)

    c = sub.add_parser("rank2", help="rank-2 decomposition round trip and partition count")
    c.add_argument("--n", type=int, required=True)

    c = sub.add_parser("bounds", help="exact verification of every counting inequality")
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--format", choices=("json", "csv"), default="json")

    c = sub.add_parser("report", help="descriptive log log m(n) table (no verdict)")
    c.add_argument("--max-n", type=int, required=True)
    return p


def parse_config(argv: Sequence[str]) -> RunConfig:
    ns = _parser().parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if v is not None and k in RunConfig.__dataclass_fields__}
    if ns.workers is None:
        fields["workers"] = default_workers()
    config = RunConfig(**fields)
    config.validate()
    return config


def _dump(obj: object, out: IO[str]) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def verify_file(path: str) -> tuple[bool, list[str]]:
    """Re-run the exchange axiom on every row; one diagnostic per failing row."""
    try:
        with open(path, encoding="ascii") as fh:
            census = read_census(fh, validate=False)
    except CensusFormatError as exc:
        return False, [f"{path}: format error: {exc}"]
    except UnicodeDecodeError:
        return False, [f"{path}: format error: not an ASCII text file"]
    messages = []
    for lineno, code in enumerate(census.codes, start=2):
        hit = exchange_witness(BasisFamily(census.n, census.r, code))
        if hit is not None:
            messages.append(
                f"{path}:{lineno}: exchange axiom fails for B={list(hit.basis)} "
                f"B'={list(hit.other)} e={hit.element}"
            )
    if messages:
        messages.append(f"{len(messages)} of {len(census)} families invalid")
        return False, messages
    return True, [f"all {len(census)} families valid"]


def _rank2_summary(n: int, workers: int) -> tuple[bool, dict]:
    census = enumerate_dfs(n, 2, workers=workers)
    round_trip = all(compose_rank2(decompose_rank2(f), n) == f for f in census.families)
    by_partitions = rank2_count_via_partitions(n)
    size = len(census)
    ok = round_trip and size == by_partitions and size <= bell_number(n + 1) and size <= (n + 1) ** (n + 1)
    return ok, {
        "n": n,
        "census_size": size,
        "m_n2": size - 1,
        "round_trip": round_trip,
        "partition_count": by_partitions,
        "bell_n_plus_1": bell_number(n + 1),
        "crude_bound": (n + 1) ** (n + 1),
        "ok": ok,
    }


def run(config: RunConfig, out: IO[str]) -> int:
    cmd = config.command
    if cmd == "census":
        census = enumerate_census(config.n, config.r, config.method, workers=config.workers)
        text = format_census(census)
        if config.out_path:
            try:
                with open(config.out_path, "w", encoding="ascii", newline="\n") as fh:
                    fh.write(text)
            except OSError as exc:
                raise UsageError(f"cannot write {config.out_path}: {exc.strerror}") from None
        else:
            out.write(text)
        return EXIT_OK
    if cmd == "counts":
        table = count_all(config.max_n, workers=config.workers)
        _dump({
            "max_n": table.max_n,
            "entries": [{"n": n, "r": r, "m": m} for (n, r), m in sorted(table.entries.items())],
            "totals": [{"n": n, "m": m} for n, m in sorted(table.totals.items())],
        }, out)
        return EXIT_OK
    if cmd == "verify":
        try:
            open(config.in_path, "rb").close()
        except OSError as exc:
            raise UsageError(f"cannot read {config.in_path}: {exc.strerror}") from None
        ok, messages = verify_file(config.in_path)
        out.write("\n".join(messages) + "\n")
        return EXIT_OK if ok else EXIT_FAIL
    if cmd == "shearer":
        census = enumerate_dfs(config.n, config.r, workers=config.workers)
        record = shearer_check(census, config.t)
        _dump(record.as_dict(), out)
        return EXIT_OK if record.holds else EXIT_FAIL
    if cmd == "rank2":
        ok, summary = _rank2_summary(config.n, config.workers)
        _dump(summary, out)
        return EXIT_OK if ok else EXIT_FAIL
    if cmd == "bounds":
        report = full_report(config.max_n, workers=config.workers)
        out.write(report.to_csv() if config.format == "csv" else report.to_json())
        return EXIT_OK if report.all_hold else EXIT_FAIL
    if cmd == "report":
        rows = asymptotic_table(count_all(config.max_n, workers=config.workers))
        _dump({
            "normative": False,
            "note": "both shapes hold only up to an unspecified additive constant",
            "columns": ["n", "m_n", "loglog_m_n", "upper_shape", "knuth_shape", "gap"],
            "rows": asymptotic_rows_as_dicts(rows),
        }, out)
        return EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None, out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = parse_config(argv)
        return run(config, out)
    except SystemExit as exc:  # argparse
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    except (UsageError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
