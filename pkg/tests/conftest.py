# tests/conftest.py
from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

# --- FORCE PROJECT ROOT ONTO sys.path ----------------------------------------

# Project root = parent of the "tests" directory
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Ensure project root is at the *front* of sys.path so it wins over site-packages
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

# -----------------------------------------------------------------------------


@pytest.fixture(scope="session", autouse=True)
def _test_env_isolation():
    """
    Session-wide defaults so tests don't pick up a developer's FRAMEKIT_*
    environment (seeds, caps, tolerances).
    """
    for key in list(os.environ):
        if key.upper().startswith("FRAMEKIT_"):
            del os.environ[key]
    os.environ["FRAMEKIT_SEED"] = "0"
    os.environ["FRAMEKIT_LOG_LEVEL"] = "warning"

    import config as cfg

    cfg.settings = cfg.Settings()
    yield


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory) -> Path:
    """The standard frame fixtures written once per session."""
    from scripts.make_fixtures import write_fixtures

    out = tmp_path_factory.mktemp("fixtures")
    write_fixtures(out, seed=0)
    return out
