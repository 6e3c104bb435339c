"""Point-count cache: a canonical JSON file of PointCount records.

Entries are keyed by (curve, p, m); each carries the field modulus it was
computed with, so cached numbers stay reproducible.  Saving always writes
the same bytes for the same content (sorted keys, sorted entries, LF).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

CACHE_VERSION = 1
ENV_CACHE = "QUARTICA_CACHE"
DEFAULT_CACHE = "quartica-counts.json"


class CacheError(ValueError):
    pass


@dataclass
class CacheFile:
    path: str
    entries: dict = field(default_factory=dict)  # (curve, p, m) -> dict

    @classmethod
    def default_path(cls) -> str:
        return os.environ.get(ENV_CACHE, DEFAULT_CACHE)

    @classmethod
    def load(cls, path: str) -> "CacheFile":
        if not os.path.exists(path):
            return cls(path)
        with open(path, "r", encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as e:
                raise CacheError(
                    f"corrupt cache {path!r}: {e.msg} at offset {e.pos}"
                ) from e
        if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
            raise CacheError(
                f"cache version mismatch in {path!r}: "
                f"expected {CACHE_VERSION}, found {data.get('version')!r}"
            )
        out = cls(path)
        for rec in data.get("counts", []):
            key = (rec["curve"], int(rec["p"]), int(rec["m"]))
            if key in out.entries:
                raise CacheError(f"duplicate cache entry for {key}")
            out.entries[key] = rec
        return out

    def lookup(self, curve: str, p: int, m: int):
        rec = self.entries.get((curve, p, m))
        return None if rec is None else int(rec["n"])

    def insert(self, curve: str, p: int, m: int, n: int, modulus) -> None:
        key = (curve, p, m)
        if key in self.entries:
            if int(self.entries[key]["n"]) != n:
                raise CacheError(f"conflicting duplicate entry for {key}")
            raise CacheError(f"duplicate cache entry for {key}")
        self.entries[key] = {
            "curve": curve,
            "p": p,
            "m": m,
            "n": n,
            "modulus": list(modulus),
        }

    def save(self) -> None:
        counts = [self.entries[k] for k in sorted(self.entries)]
        payload = {"version": CACHE_VERSION, "counts": counts}
        with open(self.path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=1, sort_keys=True)
            fh.write("\n")
