"""Exhaustive generation of every basis family on {0..n-1} satisfying the exchange axiom.

A census for (n, r) always includes the empty family, so its size is m(n, r) + 1.
Families are stored as bit-vector integers in ascending order.
"""

from __future__ import annotations

import io
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Iterator, Literal

from .combinatorics import binomial
from .matroid import BasisFamily, _first_violation, exchange_table

log = logging.getLogger(__name__)

Method = Literal["naive", "dfs"]

NAIVE_MAX_WIDTH = 24
COUNT_MAX_N = 7
HEADER_PREFIX = "matroid-census v1"


class CensusFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class Census:
    n: int
    r: int
    codes: tuple[int, ...]
    method: Method = "dfs"
    includes_empty: bool = field(default=True, init=False)

    @property
    def width(self) -> int:
        return binomial(self.n, self.r)

    @property
    def families(self) -> list[BasisFamily]:
        return [BasisFamily(self.n, self.r, c) for c in self.codes]

    @property
    def matroid_count(self) -> int:
        """m(n, r): the census minus the empty family."""
        return len(self.codes) - 1

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[BasisFamily]:
        return iter(self.families)

    def __eq__(self, other: object) -> bool:
        # method is provenance only
        if not isinstance(other, Census):
            return NotImplemented
        return (self.n, self.r, self.codes) == (other.n, other.r, other.codes)

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.codes))


def is_matroid_code(n: int, r: int, bits: int) -> bool:
    return _first_violation(n, r, bits) is None


def enumerate_naive(n: int, r: int) -> Census:
    """Test all 2^C(n,r) bit vectors with the axiom checker."""
    width = binomial(n, r)
    if width > NAIVE_MAX_WIDTH:
        raise ValueError(
            f"naive scan of 2^{width} vectors refused (limit C(n,r) <= {NAIVE_MAX_WIDTH})"
        )
    codes = tuple(b for b in range(1 << width) if _first_violation(n, r, b) is None)
    return Census(n, r, codes, "naive")


# -- pruned depth-first search ---------------------------------------------


@dataclass(frozen=True)
class _Plan:
    """Per-coordinate checks that become decidable once coordinate d is fixed.

    on_include[d]: (other, mask) pairs; including d next to an included ``other``
        is irreparable if the family misses ``mask`` (all of mask lies below d).
    on_exclude[d]: (pair, mask) with d = max(mask); excluding d is irreparable
        if both bits of ``pair`` are included and the family misses ``mask``.
    """

    width: int
    on_include: tuple[tuple[tuple[int, int], ...], ...]
    on_exclude: tuple[tuple[tuple[int, int], ...], ...]


@lru_cache(maxsize=None)
def _plan(n: int, r: int) -> _Plan:
    width = binomial(n, r)
    table = exchange_table(n, r) if width else ()
    inc: list[list[tuple[int, int]]] = [[] for _ in range(width)]
    exc: list[list[tuple[int, int]]] = [[] for _ in range(width)]
    for i in range(width):
        for j in range(width):
            for _e, mask in table[i][j]:
                if mask >> j & 1:
                    continue  # B_j itself is the exchange partner
                top = mask.bit_length() - 1
                level = max(i, j, top)
                if level == top:
                    exc[level].append(((1 << i) | (1 << j), mask))
                else:
                    other = j if level == i else i
                    inc[level].append((other, mask))
    return _Plan(
        width,
        tuple(tuple(sorted(set(x))) for x in inc),
        tuple(tuple(sorted(set(x))) for x in exc),
    )


def _dfs(plan: _Plan, depth: int, bits: int, out: list[int]) -> None:
    if depth == plan.width:
        out.append(bits)
        return
    ok = True
    for pair, mask in plan.on_exclude[depth]:
        if bits & pair == pair and not bits & mask:
            ok = False
            break
    if ok:
        _dfs(plan, depth + 1, bits, out)
    with_d = bits | (1 << depth)
    for other, mask in plan.on_include[depth]:
        if with_d >> other & 1 and not with_d & mask:
            return
    _dfs(plan, depth + 1, with_d, out)


def _prefixes(plan: _Plan, depth: int) -> list[int]:
    """Surviving partial assignments of the first ``depth`` coordinates."""
    frontier = [0]
    for d in range(depth):
        nxt = []
        for bits in frontier:
            if all(not (bits & pair == pair and not bits & mask) for pair, mask in plan.on_exclude[d]):
                nxt.append(bits)
            with_d = bits | (1 << d)
            if all(not (with_d >> o & 1 and not with_d & mask) for o, mask in plan.on_include[d]):
                nxt.append(with_d)
        frontier = nxt
    return frontier


def _branch(args: tuple[int, int, int, int]) -> list[int]:
    n, r, depth, prefix = args
    out: list[int] = []
    _dfs(_plan(n, r), depth, prefix, out)
    return out


def default_workers() -> int:
    return int(os.environ.get("MATROID_CENSUS_WORKERS", "1"))


def enumerate_dfs(n: int, r: int, workers: int | None = None, split_depth: int = 8) -> Census:
    """Depth-first include/exclude search over colex coordinates with irreparable-violation pruning.

    With ``workers > 1`` the tree is cut at ``split_depth`` and branches run in
    separate processes; the merged result is sorted, so output does not depend
    on the worker count.
    """
    workers = default_workers() if workers is None else workers
    if workers < 1:
        raise ValueError("workers must be >= 1")
    plan = _plan(n, r)
    if workers == 1 or plan.width <= split_depth:
        out: list[int] = []
        _dfs(plan, 0, 0, out)
    else:
        jobs = [(n, r, split_depth, p) for p in _prefixes(plan, split_depth)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            out = [c for part in pool.map(_branch, jobs) for c in part]
    out.sort()
    return Census(n, r, tuple(out), "dfs")


def enumerate_census(n: int, r: int, method: Method = "dfs", workers: int | None = None) -> Census:
    if method == "naive":
        return enumerate_naive(n, r)
    if method == "dfs":
        return enumerate_dfs(n, r, workers=workers)
    raise ValueError(f"unknown method {method!r}")


# -- counts ------------------------------------------------------------------


@dataclass(frozen=True)
class CountTable:
    max_n: int
    entries: dict[tuple[int, int], int]
    totals: dict[int, int]

    def m(self, n: int, r: int) -> int:
        if r > n:
            return 0
        try:
            return self.entries[(n, r)]
        except KeyError:
            raise KeyError(f"no count for (n={n}, r={r}) in table up to n={self.max_n}") from None

    def total(self, n: int) -> int:
        try:
            return self.totals[n]
        except KeyError:
            raise KeyError(f"no total for n={n} in table up to n={self.max_n}") from None


def count_all(max_n: int, workers: int | None = None, budget: int = COUNT_MAX_N) -> CountTable:
    """m(n, r) for every r <= n <= max_n via the DFS enumerator, plus m(n) by summation."""
    if max_n > budget:
        raise ValueError(f"max_n = {max_n} exceeds the enumeration budget {budget}")
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    entries: dict[tuple[int, int], int] = {}
    for n in range(max_n + 1):
        for r in range(n + 1):
            entries[(n, r)] = enumerate_dfs(n, r, workers=workers).matroid_count
            log.info("m(%d,%d) = %d", n, r, entries[(n, r)])
    totals = {n: sum(entries[(n, r)] for r in range(n + 1)) for n in range(max_n + 1)}
    return CountTable(max_n, entries, totals)


# -- census files ------------------------------------------------------------


def hex_digits(width: int) -> int:
    return -(-width // 4)


def format_census(census: Census) -> str:
    digits = hex_digits(census.width)
    lines = [f"{HEADER_PREFIX} n={census.n} r={census.r} order=colex count={len(census)}"]
    # width 0 (r > n) still needs a visible row for the empty family
    lines += [format(c, f"0{digits}x") if digits else "0" for c in census.codes]
    return "\n".join(lines) + "\n"


def write_census(census: Census, destination: IO[str]) -> None:
    destination.write(format_census(census))


def _parse_header(line: str) -> tuple[int, int, int]:
    if not line.startswith(HEADER_PREFIX + " "):
        raise CensusFormatError(f"bad header {line!r}", 1)
    fields = {}
    for tok in line[len(HEADER_PREFIX) + 1:].split(" "):
        key, sep, val = tok.partition("=")
        if not sep or key in fields:
            raise CensusFormatError(f"bad header field {tok!r}", 1)
        fields[key] = val
    if set(fields) != {"n", "r", "order", "count"}:
        raise CensusFormatError(f"header fields {sorted(fields)} != [count, n, order, r]", 1)
    if fields["order"] != "colex":
        raise CensusFormatError(f"unsupported order {fields['order']!r}", 1)
    try:
        n, r, count = int(fields["n"]), int(fields["r"]), int(fields["count"])
    except ValueError:
        raise CensusFormatError("non-integer n, r or count", 1) from None
    if min(n, r, count) < 0 or any(not fields[k].isdigit() for k in ("n", "r", "count")):
        raise CensusFormatError("n, r and count must be non-negative decimals", 1)
    return n, r, count


def read_census(source: IO[str], validate: bool = True) -> Census:
    """Parse a census file; with ``validate`` every row is re-checked against the axiom."""
    lines = source.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CensusFormatError("empty file")
    n, r, count = _parse_header(lines[0])
    width = binomial(n, r)
    digits = hex_digits(width) or 1
    rows = lines[1:]
    if len(rows) != count:
        raise CensusFormatError(f"header count={count} but {len(rows)} rows")
    codes: list[int] = []
    for lineno, row in enumerate(rows, start=2):
        if len(row) != digits:
            raise CensusFormatError(f"expected {digits} hex digits, got {len(row)}", lineno)
        if any(ch not in "0123456789abcdef" for ch in row):
            raise CensusFormatError(f"not lowercase hex: {row!r}", lineno)
        code = int(row, 16)
        if code >> width:
            raise CensusFormatError(f"value exceeds {width} bits", lineno)
        if codes and code <= codes[-1]:
            raise CensusFormatError("rows not strictly ascending", lineno)
        if validate and _first_violation(n, r, code) is not None:
            raise CensusFormatError("family violates the exchange axiom", lineno)
        codes.append(code)
    if validate and (not codes or codes[0] != 0):
        raise CensusFormatError("census lacks the empty family")
    return Census(n, r, tuple(codes))


def census_bytes(census: Census) -> bytes:
    buf = io.StringIO()
    write_census(census, buf)
    return buf.getvalue().encode("ascii")
