"""
Runtime configuration for the command-line front end.

Values come from the environment, optionally seeded from a ``.env`` file at the
repository root. Library packages never read these; the CLI passes them down.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass
from typing import Mapping, Optional

from project_paths import DOTENV_PATH
from ring_core import DEFAULT_GRASSMANN_GENERATORS

DEFAULT_MAX_N = 4
DEFAULT_LOG_LEVEL = "WARNING"


def _load_dotenv_files() -> None:
    """Load ``.env`` from the project root for local runtime config."""
    try:
        from dotenv import load_dotenv
    except ImportError:
        return
    load_dotenv(DOTENV_PATH)


def _int(env: Mapping[str, str], name: str, default: int) -> int:
    raw = env.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        logging.getLogger(__name__).warning("ignoring non-integer %s=%r", name, raw)
        return default


def _flag(env: Mapping[str, str], name: str) -> bool:
    return env.get(name, "").strip().lower() in {"1", "true", "yes", "on"}


@dataclass(frozen=True)
class Settings:
    max_n: int = DEFAULT_MAX_N
    grassmann_generators: int = DEFAULT_GRASSMANN_GENERATORS
    log_level: str = DEFAULT_LOG_LEVEL
    enable_n3_certification: bool = False


def load_settings(env: Optional[Mapping[str, str]] = None) -> Settings:
    if env is None:
        _load_dotenv_files()
        env = os.environ
    return Settings(
        max_n=_int(env, "NCCH_MAX_N", DEFAULT_MAX_N),
        grassmann_generators=_int(env, "NCCH_GRASSMANN_GENERATORS", DEFAULT_GRASSMANN_GENERATORS),
        log_level=env.get("NCCH_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper() or DEFAULT_LOG_LEVEL,
        enable_n3_certification=_flag(env, "NCCH_ENABLE_N3_CERTIFICATION"),
    )
