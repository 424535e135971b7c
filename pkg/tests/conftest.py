from fractions import Fraction

import pytest

from arrenv.arrangement import Arrangement

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def triangle() -> Arrangement:
    # x=0, y=0, x+y=1
    return Arrangement.from_rows(2, [(1, 0, 0), (0, 1, 0), (1, 1, 1)])


@pytest.fixture
def simplex3() -> Arrangement:
    return Arrangement.from_rows(3, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (1, 1, 1, 1)])


F = Fraction
