"""Opt-in on-disk cache for statistic tables.

Enabled only when the ``RANKCRANK_CACHE_DIR`` environment variable names a
directory.  Entries are JSON files keyed by (kind, N, nmax).
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .partitions import (
    CRANK_CLASSICAL,
    CRANK_S2,
    RANK_CLASSICAL,
    RANK_S1,
    StatTable,
    table_classical_crank,
    table_classical_rank,
    table_MS2,
    table_NS1,
)

ENV_VAR = "RANKCRANK_CACHE_DIR"

log = logging.getLogger(__name__)


def _build(kind: str, N: int | None, nmax: int) -> StatTable:
    if kind == RANK_S1:
        return table_NS1(N, nmax)
    if kind == CRANK_S2:
        return table_MS2(N, nmax)
    if kind == RANK_CLASSICAL:
        return table_classical_rank(nmax)
    if kind == CRANK_CLASSICAL:
        return table_classical_crank(nmax)
    raise ValueError(f"unknown table kind {kind!r}")


def cache_dir() -> Path | None:
    d = os.environ.get(ENV_VAR)
    return Path(d) if d else None


def get_table(kind: str, N: int | None, nmax: int) -> StatTable:
    root = cache_dir()
    if root is None:
        return _build(kind, N, nmax)
    path = root / f"{kind}-N{'inf' if N is None else N}-n{nmax}.json"
    if path.exists():
        log.debug("loading cached table %s", path)
        return StatTable.from_json(json.loads(path.read_text()))
    table = _build(kind, N, nmax)
    root.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(table.to_json()))
    tmp.replace(path)
    return table
