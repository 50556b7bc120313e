from pathlib import Path

import pytest

from wbcc.enumeration import SearchConfig, enumerate_classes
from wbcc.tablefile import read_table

DATA = Path(__file__).parent / "data"

TABLES = {k: read_table(DATA / f"table{k}.txt") for k in range(1, 6)}
BROKEN = read_table(DATA / "broken.txt")


@pytest.fixture(scope="session")
def tables():
    return TABLES


@pytest.fixture(scope="session")
def census():
    """Every weak BCC-algebra of order <= 5, one per isomorphism class."""
    return {n: enumerate_classes(SearchConfig(n)).tables() for n in range(1, 6)}


@pytest.fixture(scope="session")
def small(census):
    """Reference tables 1-5 plus the order <= 4 census."""
    out = list(TABLES.values())
    for n in range(1, 5):
        out += census[n]
    return out


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
