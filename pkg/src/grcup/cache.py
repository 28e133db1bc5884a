"""On-disk cache of reduced Groebner bases, one JSON file per n."""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Optional

from . import __version__
from .f2poly import Poly
from .groebner import CACHED, GroebnerBasis

log = logging.getLogger(__name__)

ENGINE_VERSION = f"grcup-{__version__}"
ENV_VAR = "GRCUP_CACHE"


class CacheIOError(OSError):
    pass


def default_cache_dir(flag: Optional[str] = None) -> Path:
    """``--cache-dir`` beats ``$GRCUP_CACHE`` beats the per-user cache dir."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    xdg = os.environ.get("XDG_CACHE_HOME")
    base = Path(xdg) if xdg else Path.home() / ".cache"
    return base / "grcup"


def basis_to_lists(polys) -> list:
    return [[list(t) for t in g.terms] for g in polys]


def checksum(n: int, version: str, basis: list) -> str:
    blob = json.dumps({"n": n, "engine_version": version, "basis": basis},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class BasisCache:
    def __init__(self, root: Path):
        self.root = Path(root)

    def path(self, n: int) -> Path:
        return self.root / f"gb_{n}.json"

    def load(self, n: int) -> Optional[GroebnerBasis]:
        """Cached reduced basis, or None on a miss, stale version or bad checksum."""
        path = self.path(n)
        try:
            raw = path.read_text()
        except FileNotFoundError:
            return None
        except OSError as exc:
            raise CacheIOError(f"cannot read {path}: {exc}") from exc
        try:
            entry = json.loads(raw)
            basis = entry["basis"]
            if entry.get("engine_version") != ENGINE_VERSION:
                log.info("stale cache entry %s (version %s)", path, entry.get("engine_version"))
                return None
            if entry.get("n") != n or entry.get("checksum") != checksum(n, ENGINE_VERSION, basis):
                log.warning("checksum mismatch in %s; recomputing", path)
                return None
            polys = tuple(Poly(tuple(t) for t in g) for g in basis)
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", path, exc)
            return None
        log.info("cache hit: %s", path)
        return GroebnerBasis(polys, CACHED, n)

    def store(self, gb: GroebnerBasis) -> Path:
        n = gb.n
        basis = basis_to_lists(gb.polys)
        entry = {
            "n": n,
            "engine_version": ENGINE_VERSION,
            "basis": basis,
            "checksum": checksum(n, ENGINE_VERSION, basis),
        }
        path = self.path(n)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, prefix=path.name, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(entry, fh, separators=(",", ":"))
            os.replace(tmp, path)
        except OSError as exc:
            raise CacheIOError(f"cannot write {path}: {exc}") from exc
        log.info("cache store: %s", path)
        return path
