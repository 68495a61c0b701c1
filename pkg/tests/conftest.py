import random

import pytest

from gausslacet.gauss import GaussCode

from acceptance_log import LINES
from oracles import EXAMPLE_SEQ


@pytest.fixture
def example_code() -> GaussCode:
    return GaussCode(tuple(EXAMPLE_SEQ))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
