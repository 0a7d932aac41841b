import pytest
from hypothesis import strategies as st

from rderange.permutation import Permutation

ACCEPTANCE_LINES: list[str] = []


@st.composite
def perms(draw, min_size=0, max_size=8):
    n = draw(st.integers(min_size, max_size))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
