"""Pytest configuration for the quintary lattice tests."""

import os

import pytest

from src.identities import SearchParameters
from src.lattices import (
    ArithmeticLattice,
    ChainLattice,
    DivisorIntervalLattice,
    PowerSetLattice,
    diamond,
    pentagon,
)

# Keep searches small and reproducible regardless of the caller's .env
os.environ.setdefault("QUINTARY_BUDGET", "10000000")
os.environ.setdefault("QUINTARY_SEED", "20110523")
os.environ.setdefault("QUINTARY_SAMPLES", "2000")
os.environ.setdefault("QUINTARY_LOG_LEVEL", "WARNING")


# Skip exhaustive tests by default
def pytest_addoption(parser):
    """Add option to run the slow exhaustive sweeps."""
    parser.addoption(
        "--run-exhaustive",
        action="store_true",
        default=False,
        help="Run exhaustive sweeps over larger lattices",
    )


def pytest_configure(config):
    """Configure pytest."""
    config.addinivalue_line("markers", "exhaustive: slow exhaustive sweep")


def pytest_collection_modifyitems(config, items):
    """Skip exhaustive tests if --run-exhaustive is not specified."""
    if config.getoption("--run-exhaustive"):
        return

    skip_exhaustive = pytest.mark.skip(reason="Need --run-exhaustive option to run")
    for item in items:
        if "exhaustive" in item.keywords:
            item.add_marker(skip_exhaustive)


@pytest.fixture
def params():
    """Search parameters small enough for unit tests."""
    return SearchParameters(
        budget=10_000_000, seed=20110523, samples=500, window=(0, 200), workers=1
    )


@pytest.fixture
def arithmetic():
    return ArithmeticLattice()


@pytest.fixture
def chain5():
    return ChainLattice(size=5)


@pytest.fixture
def powerset3():
    return PowerSetLattice(universe_size=3)


@pytest.fixture
def divisors60():
    return DivisorIntervalLattice(K=1, N=60)


@pytest.fixture
def m3():
    return diamond()


@pytest.fixture
def n5():
    return pentagon()
