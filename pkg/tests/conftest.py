"""Pytest configuration, shared fixtures and markers.

Test markers:
    slow: Full rank-4 orbits, rank-8 certificates and bulk synthesis runs

Run tests:
    pytest tests/                  # Run everything
    pytest tests/ --skip-slow      # Skip slow tests
    pytest tests/ -m "not slow"    # Same, via marker selection

Hypothesis runs under a derandomized profile so failures reproduce.
"""

import pytest
from hypothesis import HealthCheck, settings

from matroid_moves.config import MovesConfig, set_config
from matroid_moves.matroid_state import Matroid
from matroid_moves.projective_space import Space

settings.register_profile(
    "matroid_moves",
    derandomize=True,
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("matroid_moves")


def pytest_addoption(parser):
    """Add the --skip-slow option."""
    parser.addoption(
        "--skip-slow", action="store_true", default=False, help="Skip tests marked slow"
    )


def pytest_configure(config):
    """Register custom markers."""
    config.addinivalue_line(
        "markers",
        "slow: marks tests as slow (deselect with '--skip-slow' or '-m \"not slow\"')",
    )


def pytest_collection_modifyitems(config, items):
    """Skip slow tests when --skip-slow is given."""
    if not config.getoption("--skip-slow"):
        return

    skip_slow = pytest.mark.skip(reason="Slow test - skipped by --skip-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def default_config():
    """Give every test a fresh default configuration."""
    set_config(MovesConfig())
    yield
    set_config(MovesConfig())


@pytest.fixture
def p3():
    """The rank-3 geometry."""
    return Space(3)


@pytest.fixture
def p4():
    """The rank-4 geometry."""
    return Space(4)


@pytest.fixture
def full3(p3):
    """P_3 as a restriction of itself."""
    return Matroid.full(p3)


@pytest.fixture
def full4(p4):
    """P_4 as a restriction of itself."""
    return Matroid.full(p4)
