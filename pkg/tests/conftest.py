from __future__ import annotations

import math

import pytest

from saddlecount.config.closed import canonicalize_closed
from saddlecount.config.distinct import canonicalize_distinct
from saddlecount.notation import parse_closed, parse_distinct
from saddlecount.strata import StratumComponent
from saddlecount.volumes import bundled_table


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run slow statistical tests"
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: statistical test, needs --runslow to run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def table():
    return bundled_table()


def component(stratum: str, label: str = "c") -> StratumComponent:
    return StratumComponent.parse(stratum, label)


def distinct_key(text: str):
    return canonicalize_distinct(parse_distinct(text)).key()


def closed_key(text: str):
    return canonicalize_closed(parse_closed(text)).key()


def primitive_upper_vectors(L: float):
    """
    Primitive integer vectors of length at most L, one of each pair +-v.
    """
    bound = int(L) + 1
    vectors = []
    for x in range(-bound, bound + 1):
        for y in range(0, bound + 1):
            if y == 0 and x <= 0:
                continue
            if math.gcd(x, y) == 1 and x * x + y * y <= L * L:
                vectors.append((x, y))
    return vectors
