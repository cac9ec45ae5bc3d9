"""
lltlab - Result Cache
=====================
Content-addressed on-disk store for computed symmetric functions and
e-expansions.

Each entry is one file named by the SHA-256 of its instance key. The first
line is a version header; the rest is JSON holding the key and the value.
Writes go to a temporary file in the same directory and are moved into
place with os.replace, so readers only ever see complete entries.
"""

from __future__ import annotations
import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

from .models import CacheError
from .render import (
    symf_to_json, symf_from_json, eexpansion_to_json, eexpansion_from_json,
)

logger = logging.getLogger(__name__)

CACHE_VERSION = 1
HEADER = f"lltlab-cache v{CACHE_VERSION}"

_CODECS = {
    "symf": (symf_to_json, symf_from_json),
    "eexpansion": (eexpansion_to_json, eexpansion_from_json),
}


class ResultCache:
    """File cache keyed by canonical instance strings; disabled when cache_dir is None"""

    def __init__(self, cache_dir: Optional[Path] = None):
        self.cache_dir: Optional[Path] = None
        self.hits = 0
        self.misses = 0
        if cache_dir is None:
            return
        path = Path(cache_dir)
        try:
            path.mkdir(parents=True, exist_ok=True)
            marker = tempfile.NamedTemporaryFile(dir=path, prefix=".write-check-", delete=True)
            marker.close()
        except OSError as e:
            logger.warning("Cache directory %s is not writable (%s); caching disabled", path, e)
            return
        self.cache_dir = path

    @property
    def enabled(self) -> bool:
        return self.cache_dir is not None

    def path_for(self, key: str) -> Path:
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return self.cache_dir / f"{digest}.json"

    # -- raw entries ---------------------------------------------------------

    def _decode(self, key: str, kind: str, text: str):
        header, _, body = text.partition("\n")
        if header != HEADER:
            raise CacheError(f"version header {header!r}, expected {HEADER!r}")
        try:
            entry = json.loads(body)
        except ValueError as e:
            raise CacheError(f"unreadable entry: {e}") from e
        if not isinstance(entry, dict):
            raise CacheError("entry is not an object")
        if entry.get("key") != key or entry.get("kind") != kind:
            raise CacheError(f"entry holds {entry.get('kind')}:{entry.get('key')!r}")
        try:
            return _CODECS[kind][1](entry["value"])
        except (KeyError, ValueError) as e:
            raise CacheError(f"bad value: {e}") from e

    def get(self, key: str, kind: str = "symf"):
        if not self.enabled:
            return None
        path = self.path_for(key)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            self.misses += 1
            return None
        except OSError as e:
            logger.warning("Cannot read cache entry %s: %s", path.name, e)
            self.misses += 1
            return None
        try:
            value = self._decode(key, kind, text)
        except CacheError as e:
            logger.info("Ignoring cache entry for %s: %s", key, e)
            self.misses += 1
            return None
        self.hits += 1
        logger.debug("cache hit: %s", key)
        return value

    def put(self, key: str, value, kind: str = "symf") -> bool:
        if not self.enabled:
            return False
        entry = {"key": key, "kind": kind, "value": _CODECS[kind][0](value)}
        text = HEADER + "\n" + json.dumps(entry, sort_keys=True)
        try:
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as f:
                    f.write(text)
                os.replace(tmp, self.path_for(key))
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
        except OSError as e:
            logger.warning("Cannot write cache entry for %s: %s", key, e)
            return False
        logger.debug("cache store: %s", key)
        return True

    def memo(self, key: str, compute: Callable[[], object], kind: str = "symf"):
        """Cached value for key, computing and storing it on a miss"""
        value = self.get(key, kind)
        if value is None:
            value = compute()
            self.put(key, value, kind)
        return value

    def clear(self) -> int:
        if not self.enabled:
            return 0
        removed = 0
        for path in self.cache_dir.glob("*.json"):
            path.unlink()
            removed += 1
        return removed


def cache_io(cache: ResultCache, key: str, value=None, kind: str = "symf"):
    """Store value under key when given, otherwise load it (None on a miss)"""
    if value is not None:
        cache.put(key, value, kind)
        return value
    return cache.get(key, kind)
