#!/usr/bin/env python3
"""
Test suite for thickcalc configuration, registry and splitter cache
"""

import asyncio
import json
import os
import sys
import tempfile
from pathlib import Path
from unittest.mock import Mock, patch

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from src.identities.base import IdentityRegistry, IdentitySpec
from src.storage.cache_manager import SplitterCacheManager
from src.thick import generators
from src.thick.engine import EngineConfig
from src.utils.config import Config


class TestConfig:
    """Test configuration management."""

    def test_config_validation(self):
        """Test configuration validation."""
        config = Config()
        assert isinstance(config, Config)
        assert config.validate() is True

        config.oracle = "maybe"
        assert config.validate() is False

        config.oracle = "on"
        config.merge_sign = 2
        assert config.validate() is False

        config.merge_sign = 1
        config.log_level = "LOUD"
        assert config.validate() is False

    def test_environment_prefix(self):
        """Test that THICKCALC_ variables override the defaults."""
        with tempfile.TemporaryDirectory() as tmp:
            env = {
                "THICKCALC_RANK": "5",
                "THICKCALC_IDENTITY": "thick_r2, digon_eval",
                "THICKCALC_ORACLE": "OFF",
                "THICKCALC_CACHE": os.path.join(tmp, "cache", "splitters.json"),
                "THICKCALC_REPORT": os.path.join(tmp, "reports", "report.json"),
            }
            with patch.dict(os.environ, env):
                config = Config(env_file=os.path.join(tmp, "missing.env"))
            assert config.rank == 5
            assert config.identities == ["thick_r2", "digon_eval"]
            assert not config.oracle_enabled()
            assert config.to_dict()["algebra"]["rank"] == 5

    def test_directory_creation(self):
        """Test that cache and report directories are created."""
        with tempfile.TemporaryDirectory() as tmp:
            env = {
                "THICKCALC_CACHE": os.path.join(tmp, "cache", "splitters.json"),
                "THICKCALC_REPORT": os.path.join(tmp, "reports", "report.json"),
            }
            with patch.dict(os.environ, env):
                Config(env_file=os.path.join(tmp, "missing.env"))
            assert Path(tmp, "cache").exists()
            assert Path(tmp, "reports").exists()

    def test_engine_settings(self):
        """Test that the engine section builds an EngineConfig."""
        engine = EngineConfig(**Config().engine_settings())
        assert engine.merge_sign in (1, -1)


class TestIdentityRegistry:
    """Test identity registry functionality."""

    def test_identity_registration(self):
        """Test identity registration."""
        registry = IdentityRegistry()

        mock_identity = Mock(spec=IdentitySpec)
        mock_identity.name = "test_identity"

        registry.register(mock_identity)

        assert registry.get_identity("test_identity") == mock_identity
        assert registry.require("test_identity") == mock_identity
        assert "test_identity" in registry.list_identities()

    def test_identity_not_found(self):
        """Test handling of a non-existent identity."""
        registry = IdentityRegistry()
        assert registry.get_identity("non_existent") is None
        try:
            registry.require("non_existent")
        except KeyError:
            pass
        else:
            raise AssertionError("require should raise KeyError")


class TestSplitterCache:
    """Test the file-backed splitter cache."""

    def test_save_and_load(self):
        """Test that entries survive a reload."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "splitters.json")
            manager = SplitterCacheManager(path)
            key = SplitterCacheManager.make_key("split", [1], [2, 1], "ascending")
            manager.put(key, [1, 1, 1], [1, 1, 1], "psi[1] x[1,0,0] e(1 1 1)")
            assert manager.save() is True
            assert manager.save() is False

            reloaded = SplitterCacheManager(path)
            assert reloaded.get(key)["text"] == "psi[1] x[1,0,0] e(1 1 1)"
            assert reloaded.get_statistics()["by_kind"] == {"split": 1}

    def test_key_format(self):
        """Test the key layout."""
        key = SplitterCacheManager.make_key("idempotent", [2], [3], "descending", extra="x")
        assert key == "idempotent|2|3|descending|x"

    def test_corrupted_file_is_recomputed(self):
        """Test recovery from a tampered cache file."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "splitters.json")
            manager = SplitterCacheManager(path)
            manager.put("split|1|1,1|ascending", [1, 1], [1, 1], "x[1,0] psi[1] e(1 1)")
            manager.save()

            with open(path, "r", encoding="utf-8") as f:
                document = json.load(f)
            document["payload"]["split|1|1,1|ascending"]["text"] = "0"
            with open(path, "w", encoding="utf-8") as f:
                json.dump(document, f)

            recovered = SplitterCacheManager(path)
            assert recovered.entries == {}
            assert recovered.get_statistics()["recovered_from_corruption"] is True

    def test_undecodable_file_is_recomputed(self):
        """Test recovery from a file that is not JSON."""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp, "splitters.json")
            path.write_text("{not json", encoding="utf-8")
            assert SplitterCacheManager(str(path)).recovered is True

    def test_clear(self):
        """Test clearing removes the file and the entries."""
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "splitters.json")
            manager = SplitterCacheManager(path)
            manager.put("merge|1|1,1|ascending", [1, 1], [1, 1], "psi[1] e(1 1)")
            manager.save()
            assert manager.clear() is True
            assert manager.clear() is False
            assert manager.get_statistics()["total_entries"] == 0

    def test_generators_fill_the_cache(self):
        """Test that building a splitter stores it in the active cache."""
        with tempfile.TemporaryDirectory() as tmp:
            manager = SplitterCacheManager(os.path.join(tmp, "splitters.json"))
            with patch("src.thick.generators.get_cache_manager", return_value=manager):
                generators.clear_caches()
                generators.split(2, 1, 2)
            generators.clear_caches()
            assert manager.get_statistics()["by_kind"].get("split", 0) >= 1


class TestIntegration:
    """Integration tests."""

    def test_verify_in_executor(self):
        """Test a verification run off the event loop, as the API does."""
        from src.identities.base import identity_registry
        from src.identities.verifier import verify

        spec = identity_registry.require("qbinom_partition_sum")

        async def run():
            loop = asyncio.get_event_loop()
            return await loop.run_in_executor(None, lambda: verify(spec, grid=spec.grid()[:5], workers=1))

        report = asyncio.run(run())
        assert report.all_passed
        assert report.summary.total == 5


def run_tests():
    """Run all tests."""
    print("🧪 Running thickcalc System Tests")
    print("=" * 60)

    test_classes = [
        TestConfig,
        TestIdentityRegistry,
        TestSplitterCache,
        TestIntegration
    ]

    total_tests = 0
    passed_tests = 0

    for test_class in test_classes:
        print(f"\n📋 Testing {test_class.__name__}...")

        test_instance = test_class()
        test_methods = [method for method in dir(test_instance) if method.startswith('test_')]

        for method_name in test_methods:
            total_tests += 1
            try:
                method = getattr(test_instance, method_name)

                # Handle async methods
                if asyncio.iscoroutinefunction(method):
                    asyncio.run(method())
                else:
                    method()

                print(f"  ✅ {method_name}")
                passed_tests += 1

            except Exception as e:
                print(f"  ❌ {method_name}: {str(e)}")

    print(f"\n📊 Test Results: {passed_tests}/{total_tests} tests passed")

    if passed_tests == total_tests:
        print("🎉 All tests passed!")
        return True
    else:
        print("⚠️  Some tests failed. Check the output above.")
        return False


if __name__ == "__main__":
    success = run_tests()
    sys.exit(0 if success else 1)
