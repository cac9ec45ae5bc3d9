"""
lltlab - Configuration
======================
Defaults, config.json and the LLTLAB_CACHE environment variable.

Precedence, lowest first: built-in defaults, config.json, environment,
command-line flags (applied by the CLI through Settings.override).
"""

from __future__ import annotations
import json
import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from .models import InputError, ResidualMarks

logger = logging.getLogger(__name__)

CACHE_ENV = "LLTLAB_CACHE"
DEFAULT_CONFIG = Path(__file__).resolve().parent.parent / "config.json"


@dataclass(frozen=True)
class Settings:
    cache_dir: Optional[Path] = None
    jobs: int = 1
    residual_marks: ResidualMarks = ResidualMarks.INHERITED
    log_dir: Path = Path("logs")

    def override(self, **changes) -> "Settings":
        """Apply the non-None values in changes"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _from_mapping(data: dict, base: Settings) -> Settings:
    settings = base
    if data.get("cache_dir"):
        settings = replace(settings, cache_dir=Path(data["cache_dir"]).expanduser())
    if "jobs" in data:
        jobs = int(data["jobs"])
        if jobs < 1:
            raise InputError(f"jobs must be at least 1, got {jobs}")
        settings = replace(settings, jobs=jobs)
    if data.get("residual_marks"):
        settings = replace(settings, residual_marks=ResidualMarks.from_string(data["residual_marks"]))
    if data.get("log_dir"):
        settings = replace(settings, log_dir=Path(data["log_dir"]).expanduser())
    return settings


def load_config(path: Optional[Path] = None, environ=None) -> Settings:
    """Defaults, then the config file, then the environment"""
    path = Path(path) if path is not None else DEFAULT_CONFIG
    environ = os.environ if environ is None else environ
    settings = Settings()

    if path.exists():
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
            if not isinstance(data, dict):
                raise ValueError("top level must be an object")
            settings = _from_mapping(data, settings)
        except (OSError, ValueError, TypeError) as e:
            logger.warning("Ignoring config %s: %s", path, e)
            settings = Settings()
    else:
        logger.debug("No config file at %s, using defaults", path)

    env_cache = environ.get(CACHE_ENV)
    if env_cache:
        settings = replace(settings, cache_dir=Path(env_cache).expanduser())
    return settings
