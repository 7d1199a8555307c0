#!/usr/bin/env python3
"""
Checks that every thickcalc package imports and the configuration validates
"""

import importlib
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

MODULES = [
    ("sympy", "Exact polynomials"),
    ("numpy", "Random generator"),
    ("src.symfunc.littlewood", "Symmetric functions"),
    ("src.klr.reduction", "Thin reducer"),
    ("src.klr.polyrep", "Polynomial representation"),
    ("src.thick.diagram", "Thick diagrams"),
    ("src.thick.calibration", "Engine calibration"),
    ("src.identities.verifier", "Identity verifier"),
    ("src.storage.cache_manager", "Splitter cache"),
    ("src.cli.commands", "Command line"),
]


def check_imports() -> bool:
    """Import every package, reporting each one."""
    print("🧪 Importing packages...")
    ok = True
    for module, label in MODULES:
        try:
            importlib.import_module(module)
            print(f"✅ {label} ({module})")
        except Exception as e:
            print(f"❌ {label} ({module}): {e}")
            ok = False
    return ok


def check_config() -> bool:
    """Validate the THICKCALC_ settings and list the registered identities."""
    print("\n🔧 Checking configuration...")
    try:
        from src.identities.base import identity_registry
        from src.utils.config import config

        if not config.validate():
            print("⚠️  Configuration invalid - please check the THICKCALC_ variables in .env")
            return False
        print(f"✅ Configuration valid (rank {config.rank}, {config.max_strands} strands)")
        print(f"✅ {len(identity_registry.list_identities())} identities registered")
        return True
    except Exception as e:
        print(f"❌ Configuration error: {e}")
        return False


if __name__ == "__main__":
    print("🚀 thickcalc - Import Check")
    print("=" * 40)

    if check_imports() and check_config():
        print("\n✅ System ready to run!")
        print("💡 Run: python main.py verify")
    else:
        print("\n❌ System not ready. Please fix the issues above.")
        sys.exit(1)
