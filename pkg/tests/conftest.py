import pytest

from hurwitz import HurwitzCache


@pytest.fixture(scope="session")
def shared_cache() -> HurwitzCache:
    """One memo store for the whole run; values are theorems, sharing is safe."""
    return HurwitzCache()
