"""On-disk cache of character tables, keyed by the group file's content hash.

Entries are written to a temporary file and renamed into place, so a
reader never sees a half-written table.  An entry that fails to parse or
validate is reported on stderr and rebuilt.
"""

from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path

from .chartab import DEFAULT_SEED, CharacterTable, character_table, table_from_dict, table_to_json
from .group import Group

ENV_VAR = "BLOCKLAB_CACHE"


def resolve_cache_dir(flag: str | None) -> Path | None:
    value = flag or os.environ.get(ENV_VAR)
    return Path(value) if value else None


def entry_path(cache_dir: Path, key: str) -> Path:
    return cache_dir / f"{key}.table.json"


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def cached_table(G: Group, key: str, cache_dir: Path | None, *, seed: int = DEFAULT_SEED) -> CharacterTable:
    """Load the table for ``G`` from the cache, computing and storing it on a miss."""
    if cache_dir is None:
        return character_table(G, seed=seed)
    path = entry_path(cache_dir, key)
    if path.exists():
        try:
            return table_from_dict(G, json.loads(path.read_text(encoding="utf-8")))
        except (ValueError, KeyError, TypeError, AttributeError) as exc:
            print(f"warning: cache entry {path} is unusable ({exc}); rebuilding", file=sys.stderr)
    table = character_table(G, seed=seed)
    write_atomic(path, table_to_json(table))
    return table
