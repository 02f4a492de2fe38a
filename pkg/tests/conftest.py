import sys

import pytest

from monoidpoints.fixtures import fixture


def el(m, name):
    """Element index by display name."""
    return list(m.names).index(name)


def els(m, *names):
    return frozenset(el(m, n) for n in names)


@pytest.fixture
def m5():
    return fixture("m5")


@pytest.fixture
def two():
    return fixture("two")


@pytest.fixture
def trivial():
    return fixture("trivial")


@pytest.fixture(scope="session")
def t3():
    return fixture("t3")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
