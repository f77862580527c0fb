"""On-disk JSON cache of J_alpha tables, one file per (family, rank).

The cache is advisory: a missing, unreadable or mismatched file is ignored
and everything is recomputed.  Saving is deterministic, so recomputing and
saving again reproduces the file byte for byte.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .engine import JTable
from .poly import RatFunc, poly_from_json, poly_to_json
from .rootsys import RootSystemSpec

ENV_VAR = "JALPHA_CACHE_DIR"

log = logging.getLogger(__name__)


def default_cache_dir() -> Path | None:
    value = os.environ.get(ENV_VAR)
    return Path(value) if value else None


def cache_path(directory: str | os.PathLike, spec: RootSystemSpec) -> Path:
    return Path(directory) / f"{spec.family}{spec.rank}.json"


def table_to_dict(table: JTable) -> dict:
    entries = []
    for alpha, value in table.entries.items():
        entries.append({"alpha": list(alpha), "num": poly_to_json(value.num), "den": poly_to_json(value.den)})
    return {"family": table.spec.family, "rank": table.spec.rank, "entries": entries}


def dumps_table(table: JTable) -> str:
    return json.dumps(table_to_dict(table), indent=1) + "\n"


def load_into(table: JTable, directory: str | os.PathLike) -> int:
    """Seed ``table`` from the cache file; returns the number of entries loaded."""
    if table.method != "fermionic":
        return 0
    path = cache_path(directory, table.spec)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        return 0
    except (OSError, ValueError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return 0
    if data.get("family") != table.spec.family or data.get("rank") != table.spec.rank:
        log.warning("ignoring cache %s: it belongs to another root system", path)
        return 0
    loaded = 0
    try:
        for entry in data["entries"]:
            alpha = tuple(entry["alpha"])
            if alpha in table:
                continue
            value = RatFunc(poly_from_json(entry["num"]), poly_from_json(entry["den"]))
            table.put(alpha, value)
            loaded += 1
    except (KeyError, TypeError, ValueError) as exc:
        log.warning("stopped reading cache %s: %s", path, exc)
    return loaded


def save(table: JTable, directory: str | os.PathLike) -> Path:
    """Write the whole table, merged with what is already on disk."""
    path = cache_path(directory, table.spec)
    path.parent.mkdir(parents=True, exist_ok=True)
    merged = JTable(table.spec)
    load_into(merged, directory)
    for alpha, value in table.entries.items():
        merged.put(alpha, value)
    tmp = path.with_suffix(".json.tmp")
    tmp.write_text(dumps_table(merged), encoding="utf-8")
    os.replace(tmp, path)
    return path


def verify(directory: str | os.PathLike, spec: RootSystemSpec) -> list[tuple[int, ...]]:
    """Recompute every cached entry; return the alphas whose stored value differs."""
    cached = JTable(spec)
    load_into(cached, directory)
    fresh = JTable(spec)
    bad = []
    for alpha in cached.keys():
        if fresh.get(alpha) != cached.get(alpha):
            bad.append(alpha)
    return bad
