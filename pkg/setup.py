#!/usr/bin/env python3
"""
Bootstrap script for thickcalc: dependencies, data directories, .env and a smoke run
"""

import os
import subprocess
import sys
from pathlib import Path

DATA_DIRECTORIES = ["data", "data/cache", "data/reports"]

ENV_TEMPLATE = """# Algebra
THICKCALC_RANK=4
THICKCALC_MAX_STRANDS=6

# Verification
THICKCALC_IDENTITY=
THICKCALC_ORACLE=on
THICKCALC_WORKERS=1
THICKCALC_SEED=0

# Engine choices (checked by calibration before every verify run)
THICKCALC_ORIENTATION=ascending
THICKCALC_MERGE_SIGN=1
THICKCALC_SPLIT_SIGN=1
THICKCALC_DELTA_ORDER=descending

# Storage Paths
THICKCALC_CACHE=./data/cache/splitters.json
THICKCALC_REPORT=./data/reports/report.json

# Server Configuration
THICKCALC_HOST=127.0.0.1
THICKCALC_PORT=8000

THICKCALC_LOG_LEVEL=INFO
"""


def run_step(command: list, description: str) -> bool:
    """Run one bootstrap step and report its outcome."""
    print(f"🔄 {description}...")
    try:
        subprocess.run(command, check=True, capture_output=True, text=True, env=dict(os.environ, PYTHONPATH=""))
    except subprocess.CalledProcessError as e:
        print(f"❌ {description} failed:")
        print(f"   {e.stderr or e.stdout}")
        return False
    print(f"✅ {description}")
    return True


def write_env_file(path: Path):
    if path.exists():
        print(f"✅ {path} already exists, leaving it unchanged")
        return
    path.write_text(ENV_TEMPLATE, encoding="utf-8")
    print(f"📝 Wrote {path} with default THICKCALC_ settings")


def check_core_imports() -> bool:
    missing = []
    for module in ("sympy", "numpy", "pydantic", "click", "dotenv"):
        try:
            __import__(module)
        except ImportError:
            missing.append(module)
    if missing:
        print(f"❌ Missing packages: {', '.join(missing)}")
        return False
    try:
        import fastapi  # noqa: F401
    except ImportError:
        print("⚠️  FastAPI not available; the HTTP front end will not start")
    print("✅ Core packages import")
    return True


def main():
    """Install, configure and smoke-test thickcalc."""
    print("🚀 Setting up thickcalc")
    print("=" * 60)

    if sys.version_info < (3, 9):
        print("❌ Python 3.9 or higher is required")
        sys.exit(1)

    if not run_step([sys.executable, "-m", "pip", "install", "-r", "requirements.txt"], "Installing requirements"):
        sys.exit(1)

    for directory in DATA_DIRECTORIES:
        Path(directory).mkdir(parents=True, exist_ok=True)
    print(f"✅ Data directories ready: {', '.join(DATA_DIRECTORIES)}")

    write_env_file(Path(".env"))

    if not check_core_imports():
        sys.exit(1)

    # Calibrates the engine and fills the splitter cache for small thicknesses.
    smoke = [sys.executable, "main.py", "verify", "--identity", "digon_eval", "--max-strands", "3", "--oracle", "off"]
    if not run_step(smoke, "Smoke run of the digon identities"):
        print("⚠️  The engine failed its smoke run; see `python main.py verify --identity digon_eval`")

    print("\n🎉 Setup complete")
    print("\n📋 Next steps:")
    print("1. Run the full suite: python main.py verify")
    print("2. Start the API server: python -m src.api.main")
    print("3. Run the tests: pytest")
    print("\n📚 Environment variables are described in CONFIGURATION.md")


if __name__ == "__main__":
    main()
