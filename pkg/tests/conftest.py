from functools import lru_cache

import pytest

from subspace_aut.field import FieldSpec
from subspace_aut.graph import build_graph


@lru_cache(maxsize=None)
def field(p, m=1):
    return FieldSpec(p, m)


@lru_cache(maxsize=None)
def graph(p, m, n):
    return build_graph(field(p, m), n)


@pytest.fixture
def F2():
    return field(2)


@pytest.fixture
def F3():
    return field(3)


@pytest.fixture
def F4():
    return field(2, 2)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
