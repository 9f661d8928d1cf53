import random

import pytest
from hypothesis import settings

from grasstorus.grassmann import Plane, plucker_of

settings.register_profile("fast", max_examples=40, deadline=None)
settings.load_profile("fast")

W5_ROWS = ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3))


@pytest.fixture
def w5():
    return Plane.from_rows(W5_ROWS)


@pytest.fixture
def pv5(w5):
    return plucker_of(w5)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(mod.RESULTS):
            terminalreporter.write_line(line)
