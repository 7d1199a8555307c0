import pytest

from src.storage.cache_manager import SplitterCacheManager, set_cache_manager


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path):
    """Every test gets its own splitter cache file."""
    manager = SplitterCacheManager(str(tmp_path / "cache" / "splitters.json"))
    set_cache_manager(manager)
    yield manager
    set_cache_manager(None)
