import os
from itertools import product
from pathlib import Path

import pytest

from testsets.io import read_matrix
from testsets.lattice import IntMatrix

DATA = Path(__file__).parent / "data"
EXTENDED = os.environ.get("TESTSETS_EXTENDED") == "1"

COIN = IntMatrix(((1, 1, 1, 1), (1, 5, 10, 25)))
COIN_COST = (0, 1, 0, 1)

# criterion lines collected by the acceptance suite, printed at the end
ACCEPTANCE_LINES: list[str] = []


def brute_fiber(A: IntMatrix, b, box: int):
    """Every u in [0, box]^n with A u = b."""
    b = tuple(b)
    return [u for u in product(range(box + 1), repeat=A.n) if A * u == b]


def pytest_collection_modifyitems(config, items):
    if EXTENDED:
        return
    skip = pytest.mark.skip(reason="extended run; set TESTSETS_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def data():
    return DATA


@pytest.fixture(scope="session")
def prime():
    return read_matrix(DATA / "example")
