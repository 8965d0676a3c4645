import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fuzzy_semiprime.structures import OrderedGroupoid  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


def F(p, q=1):
    return Fraction(p, q)


@pytest.fixture
def chain_const_a():
    """a < b, every product is a."""
    return OrderedGroupoid.from_order([[0, 0], [0, 0]], [(0, 1)])


@pytest.fixture
def chain_const_b():
    """a < b, every product is b."""
    return OrderedGroupoid.from_order([[1, 1], [1, 1]], [(0, 1)])


@pytest.fixture
def discrete_const_b():
    return OrderedGroupoid.discrete([[1, 1], [1, 1]])


@pytest.fixture
def singleton():
    return OrderedGroupoid.from_order([[0]])


@pytest.fixture
def golden():
    return GOLDEN


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance")
        for line in RESULTS:
            terminalreporter.write_line(line)
