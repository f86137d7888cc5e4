"""
Import-path bootstrap and well-known locations for the workbench.

The CLI and the test suite run straight from a checkout, without installing the
packages; use this module instead of repeating ``sys.path`` insertion snippets.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Iterable

PROJECT_ROOT = Path(__file__).resolve().parent
UNIT_TESTS_DIR = PROJECT_ROOT / "unit_tests"
FIXTURES_DIR = UNIT_TESTS_DIR / "fixtures"
# optional NCCH_* settings for local runs
DOTENV_PATH = PROJECT_ROOT / ".env"


def ensure_paths(paths: Iterable[Path]) -> None:
    """Insert the given paths at the front of ``sys.path`` if absent."""
    for p in paths:
        s = str(p.resolve())
        if s not in sys.path:
            sys.path.insert(0, s)


def ensure_project_root() -> None:
    """Make ring_core, matrix_algebra, charpoly_engine, identity_verifier and cli_app importable."""
    ensure_paths((PROJECT_ROOT,))


def ensure_test_paths() -> None:
    """Project root plus ``unit_tests`` for the shared hypothesis strategies."""
    ensure_paths((PROJECT_ROOT, UNIT_TESTS_DIR))


def fixture_path(name: str) -> Path:
    """Path of a job file or golden output under ``unit_tests/fixtures``; may not exist."""
    return FIXTURES_DIR / name
