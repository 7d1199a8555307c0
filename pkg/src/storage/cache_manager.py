import json
import hashlib
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional

from src.utils.config import config
from src.utils.errors import CacheCorruptionError

logger = logging.getLogger(__name__)

CACHE_FORMAT = "thickcalc-cache"
CACHE_VERSION = 1


def _checksum(payload: Dict[str, Any]) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


class SplitterCacheManager:
    """File-backed cache of reduced splitter and idempotent elements.

    Entries are read from disk once; new entries stay in memory until `save()`,
    which only the parent process calls.
    """

    def __init__(self, cache_path: Optional[str] = None):
        self.cache_path = Path(cache_path or config.cache_path)
        self.cache_path.parent.mkdir(parents=True, exist_ok=True)
        self.entries: Dict[str, Dict[str, Any]] = {}
        self.dirty = False
        self.recovered = False
        self._load()

    def _read(self) -> Dict[str, Dict[str, Any]]:
        """Read and check the file; raises CacheCorruptionError on any mismatch."""
        try:
            with open(self.cache_path, "r", encoding="utf-8") as handle:
                document = json.load(handle)
        except (OSError, ValueError) as exc:
            raise CacheCorruptionError(f"cannot decode {self.cache_path}: {exc}") from exc

        if not isinstance(document, dict) or document.get("format") != CACHE_FORMAT:
            raise CacheCorruptionError(f"{self.cache_path} is not a {CACHE_FORMAT} file")
        if document.get("version") != CACHE_VERSION:
            raise CacheCorruptionError(f"{self.cache_path} has version {document.get('version')}, expected {CACHE_VERSION}")
        payload = document.get("payload")
        if not isinstance(payload, dict) or document.get("checksum") != _checksum(payload):
            raise CacheCorruptionError(f"checksum mismatch in {self.cache_path}")
        return payload

    def _load(self):
        if not self.cache_path.exists():
            return
        try:
            self.entries = self._read()
            logger.debug("Loaded %d cached elements from %s", len(self.entries), self.cache_path)
        except CacheCorruptionError as exc:
            logger.warning("Splitter cache corrupted, recomputing: %s", exc)
            self.entries = {}
            self.dirty = True
            self.recovered = True

    @staticmethod
    def make_key(kind: str, colors: List[int], thicknesses: List[int], engine: str, extra: str = "") -> str:
        """`kind|colors|thicknesses|engine` (plus an optional decoration)."""
        key = "|".join([
            kind,
            ",".join(map(str, colors)),
            ",".join(map(str, thicknesses)),
            engine,
        ])
        return f"{key}|{extra}" if extra else key

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        return self.entries.get(key)

    def put(self, key: str, bottom: List[int], top: List[int], text: str):
        self.entries[key] = {"bottom": list(bottom), "top": list(top), "text": text}
        self.dirty = True

    def save(self) -> bool:
        """Write the cache if anything changed."""
        if not self.dirty:
            return False
        document = {
            "format": CACHE_FORMAT,
            "version": CACHE_VERSION,
            "checksum": _checksum(self.entries),
            "written_at": datetime.now().isoformat(),
            "payload": self.entries,
        }
        tmp_path = self.cache_path.with_suffix(".tmp")
        with open(tmp_path, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=2, sort_keys=True)
        tmp_path.replace(self.cache_path)
        self.dirty = False
        logger.info("Saved %d cached elements to %s", len(self.entries), self.cache_path)
        return True

    def clear(self) -> bool:
        """Drop every entry and delete the file."""
        self.entries = {}
        self.dirty = False
        if self.cache_path.exists():
            self.cache_path.unlink()
            return True
        return False

    def get_statistics(self) -> Dict[str, Any]:
        kinds: Dict[str, int] = {}
        for key in self.entries:
            kind = key.split("|", 1)[0]
            kinds[kind] = kinds.get(kind, 0) + 1
        return {
            "total_entries": len(self.entries),
            "by_kind": dict(sorted(kinds.items())),
            "cache_path": str(self.cache_path),
            "exists": self.cache_path.exists(),
            "recovered_from_corruption": self.recovered,
        }


# Global instance
_cache_manager = None


def get_cache_manager() -> SplitterCacheManager:
    """Get the global cache manager instance."""
    global _cache_manager
    if _cache_manager is None:
        _cache_manager = SplitterCacheManager()
    return _cache_manager


def set_cache_manager(manager: Optional[SplitterCacheManager]) -> None:
    """Replace the global instance (None resets it to be rebuilt from config)."""
    global _cache_manager
    _cache_manager = manager
