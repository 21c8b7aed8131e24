"""
In-process memo of oracle censuses.

Censuses are keyed by (n, kind). Only the longest census computed so far is kept
for each key. A request for a shorter length range is answered by truncating it.
"""
from __future__ import annotations

import hashlib
import json
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .census import LengthCensus

_censuses: dict[str, LengthCensus] = {}
_hits: int = 0
_misses: int = 0


def _make_key(n: int, kind: str) -> str:
    normalized = json.dumps({"n": n, "kind": kind}, sort_keys=True)
    return hashlib.sha256(normalized.encode()).hexdigest()[:16]


def census_get(n: int, kind: str, kmax: int) -> LengthCensus | None:
    global _hits, _misses
    entry = _censuses.get(_make_key(n, kind))
    if entry is not None and entry.kmax >= kmax:
        _hits += 1
        return entry.truncated(kmax)
    _misses += 1
    return None


def census_set(census: LengthCensus) -> None:
    key = _make_key(census.n, census.kind.value)
    current = _censuses.get(key)
    if current is None or current.kmax < census.kmax:
        _censuses[key] = census


def get_cache_stats() -> dict:
    total = _hits + _misses
    return {
        "size": len(_censuses),
        "longest": {f"{c.kind.value}:{c.n}": c.kmax for c in _censuses.values()},
        "hits": _hits,
        "misses": _misses,
        "hit_rate": round(_hits / total * 100, 1) if total > 0 else 0.0,
    }


def clear_cache() -> None:
    global _hits, _misses
    _censuses.clear()
    _hits = 0
    _misses = 0
