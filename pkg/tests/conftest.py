from functools import lru_cache

import pytest

from matroid_census.enumeration import Census, count_all, enumerate_dfs

_acceptance: list[tuple[str, bool, str]] = []


@lru_cache(maxsize=None)
def census(n: int, r: int) -> Census:
    return enumerate_dfs(n, r, workers=1)


@pytest.fixture(scope="session")
def counts6():
    return count_all(6, workers=1)


@pytest.fixture(scope="session")
def counts7():
    return count_all(7, workers=1)


@pytest.fixture
def acceptance():
    def record(label: str, passed: bool, detail: str = "") -> None:
        _acceptance.append((label, passed, detail))
        assert passed, f"{label}: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _acceptance:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
