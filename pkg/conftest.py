import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from fixtures.fixture_store import FixtureStore  # noqa: E402


@pytest.fixture(scope="session")
def store():
    return FixtureStore()


@pytest.fixture(scope="session")
def fixture(store):
    """Load a committed fixture by name"""
    return store.load
