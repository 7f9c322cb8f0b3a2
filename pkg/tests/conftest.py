import pytest
from hypothesis import settings

from blockshuffle.ncpoly import NCPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def w(*letters):
    return NCPoly({tuple(letters): 1})


@pytest.fixture
def word():
    return w


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
