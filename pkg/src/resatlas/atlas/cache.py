"""JSON cache of enumerated components keyed by (i, j, code version)."""
from __future__ import annotations

import hashlib
import json
import os
from functools import lru_cache
from pathlib import Path

from ..components.records import ComponentRecord, enumerate_components
from .reference import VERSION

_PKG = Path(__file__).resolve().parent.parent
_SOURCES = ("arith", "forests", "components")


@lru_cache(maxsize=None)
def code_version() -> str:
    """Short hash of the sources that determine enumeration output."""
    h = hashlib.sha256(VERSION.encode())
    for sub in _SOURCES:
        for path in sorted((_PKG / sub).glob("*.py")):
            h.update(path.name.encode())
            h.update(path.read_bytes())
    return h.hexdigest()[:16]


def cache_dir() -> Path:
    env = os.environ.get("RESATLAS_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "resatlas"


def cache_path(i: int, j: int, root: Path | None = None) -> Path:
    return (root or cache_dir()) / f"irr_{i}_{j}_{code_version()}.json"


def load_components(i: int, j: int, use_cache: bool = True, root: Path | None = None) -> list[ComponentRecord]:
    """Records of Irr(i, j), read from or written to the cache when allowed."""
    if not use_cache:
        return enumerate_components(i, j)
    path = cache_path(i, j, root)
    if path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("version") == code_version():
                return [ComponentRecord.from_json(r) for r in data["records"]]
        except (OSError, ValueError, KeyError):
            pass
    recs = enumerate_components(i, j)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"i": i, "j": j, "version": code_version(), "records": [r.to_json() for r in recs]}
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload, sort_keys=True))
        tmp.replace(path)
    except OSError:
        pass  # read-only home: run uncached
    return recs
