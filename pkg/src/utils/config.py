import logging
import os
from pathlib import Path
from typing import Dict, Any, List
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

ENV_PREFIX = "THICKCALC_"


def _env(name: str, default: str) -> str:
    return os.getenv(ENV_PREFIX + name, default)


class Config:
    """Configuration manager for the application."""

    def __init__(self, env_file: str = ".env"):
        # Load environment variables
        load_dotenv(env_file)

        # Algebra
        self.rank = int(_env("RANK", "4"))
        self.max_strands = int(_env("MAX_STRANDS", "6"))

        # Verification
        identities = _env("IDENTITY", "")
        self.identities: List[str] = [name.strip() for name in identities.split(",") if name.strip()]
        self.oracle = _env("ORACLE", "on").lower()
        self.workers = int(_env("WORKERS", "1"))
        self.seed = int(_env("SEED", "0"))

        # Engine choices
        self.orientation = _env("ORIENTATION", "ascending").lower()
        self.merge_sign = int(_env("MERGE_SIGN", "1"))
        self.split_sign = int(_env("SPLIT_SIGN", "1"))
        self.delta_order = _env("DELTA_ORDER", "descending").lower()

        # Storage Paths
        self.cache_path = _env("CACHE", "./data/cache/splitters.json")
        self.report_path = _env("REPORT", "./data/reports/report.json")

        # Server Configuration
        self.host = _env("HOST", "127.0.0.1")
        self.port = int(_env("PORT", "8000"))

        self.log_level = _env("LOG_LEVEL", "INFO").upper()

        # Create necessary directories
        self._create_directories()

    def _create_directories(self):
        """Create the parent directories of the cache and report files."""
        for path in (self.cache_path, self.report_path):
            Path(path).parent.mkdir(parents=True, exist_ok=True)

    def validate(self) -> bool:
        """Validate configuration."""
        errors = []

        if self.rank < 2:
            errors.append("RANK must be at least 2")

        if self.max_strands < 1:
            errors.append("MAX_STRANDS must be positive")

        if self.oracle not in ("on", "off"):
            errors.append("ORACLE must be 'on' or 'off'")

        if self.workers < 1:
            errors.append("WORKERS must be positive")

        if self.orientation not in ("ascending", "descending"):
            errors.append("ORIENTATION must be 'ascending' or 'descending'")

        if self.merge_sign not in (1, -1) or self.split_sign not in (1, -1):
            errors.append("MERGE_SIGN and SPLIT_SIGN must be 1 or -1")

        if self.delta_order not in ("descending", "ascending"):
            errors.append("DELTA_ORDER must be 'descending' or 'ascending'")

        if self.port < 1 or self.port > 65535:
            errors.append("PORT must be between 1 and 65535")

        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            errors.append("LOG_LEVEL must be a logging level name")

        if errors:
            logger.error("Configuration errors:")
            for error in errors:
                logger.error("  - %s", error)
            return False

        return True

    def oracle_enabled(self) -> bool:
        return self.oracle == "on"

    def engine_settings(self) -> Dict[str, Any]:
        """The orientation and sign choices, in EngineConfig field names."""
        return {
            "orientation": self.orientation,
            "merge_sign": self.merge_sign,
            "split_sign": self.split_sign,
            "delta_order": self.delta_order,
        }

    def to_dict(self) -> Dict[str, Any]:
        """Convert configuration to dictionary."""
        return {
            "algebra": {
                "rank": self.rank,
                "max_strands": self.max_strands
            },
            "verification": {
                "identities": list(self.identities),
                "oracle": self.oracle,
                "workers": self.workers,
                "seed": self.seed
            },
            "engine": self.engine_settings(),
            "storage": {
                "cache_path": self.cache_path,
                "report_path": self.report_path
            },
            "server": {
                "host": self.host,
                "port": self.port
            }
        }


# Global configuration instance
config = Config()
