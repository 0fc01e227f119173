"""Partitions, vector partitions, and exact weighted rank/crank tables.

Two tables come from the finite (N-capped) vector partition sets:

* rank table: pairs (pi1, pi2), pi1 with distinct parts in [N-j+1, N] (or
  empty), pi2 with Durfee square side exactly j, summed over j = 1..N,
  weight (-1)^{#pi1}, statistic rank(pi2).
* crank table: triples (pi1, pi2, pi3), pi1 distinct parts, every part of
  every component <= N, weight (-1)^{#pi1}, statistic #pi2 - #pi3.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping

RANK_S1 = "rank-S1"
CRANK_S2 = "crank-S2"
RANK_CLASSICAL = "rank-classical"
CRANK_CLASSICAL = "crank-classical"
KINDS = (RANK_S1, CRANK_S2, RANK_CLASSICAL, CRANK_CLASSICAL)

BRUTEFORCE_LIMIT = 14


class Partition(tuple):
    """Weakly decreasing tuple of positive parts."""

    def __new__(cls, parts=()):
        parts = tuple(parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("parts must be weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def largest(self) -> int:
        return self[0] if self else 0

    @property
    def smallest(self) -> int:
        return self[-1] if self else 0

    @property
    def durfee(self) -> int:
        d = 0
        while d < len(self) and self[d] >= d + 1:
            d += 1
        return d

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield the partitions of n with parts <= max_part in reverse-lexicographic order.

    For n = 4: (4), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    cap = n if max_part is None else min(n, max_part)

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(n, cap):
        yield Partition(parts)


def distinct_partitions(n: int, max_part: int | None = None, min_part: int = 1) -> Iterator[Partition]:
    """Partitions of n into distinct parts in [min_part, max_part], reverse-lex order."""
    cap = n if max_part is None else min(n, max_part)

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), min_part - 1, -1):
            for tail in rec(rest - first, first - 1):
                yield (first,) + tail

    for parts in rec(n, cap):
        yield Partition(parts)


def rank(p: Partition) -> int:
    if not p:
        raise ValueError("rank of the empty partition is undefined")
    return p[0] - len(p)


def smallest_part_count(p: Partition) -> int:
    return p.count(p[-1]) if p else 0


def spt_finite(n: int, N: int) -> int:
    """Total number of smallest parts over partitions of n with largest part <= N."""
    if n < 1 or N < 1:
        raise ValueError("n and N must be positive")
    return sum(smallest_part_count(p) for p in enumerate_partitions(n, N))


def spt(n: int) -> int:
    return spt_finite(n, n)


def partition_count(n: int, max_part: int | None = None) -> int:
    return sum(1 for _ in enumerate_partitions(n, max_part))


@dataclass(frozen=True)
class StatTable:
    """Exact table of weighted counts c(m, n), stored sparsely (zeros omitted)."""

    kind: str
    cap: int | None  # None for the classical (uncapped) tables
    nmax: int
    rows: Mapping[int, Mapping[int, int]] = field(repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        frozen = {n: MappingProxyType({m: c for m, c in sorted(r.items()) if c})
                  for n, r in sorted(self.rows.items())}
        object.__setattr__(self, "rows", MappingProxyType(frozen))

    @property
    def min_n(self) -> int:
        return 1 if self.kind in (RANK_S1, RANK_CLASSICAL) else 0

    def row(self, n: int) -> Mapping[int, int]:
        if not self.min_n <= n <= self.nmax:
            raise IndexError(f"n={n} outside table range {self.min_n}..{self.nmax}")
        return self.rows.get(n, MappingProxyType({}))

    def get(self, m: int, n: int) -> int:
        return self.row(n).get(m, 0)

    def is_symmetric(self) -> bool:
        return all(r.get(-m, 0) == c for r in self.rows.values() for m, c in r.items())

    def column_sum(self, n: int) -> int:
        return sum(self.row(n).values())

    def entries(self) -> Iterator[tuple[int, int, int]]:
        """(n, m, value) for every nonzero entry, sorted by n then m."""
        for n in range(self.min_n, self.nmax + 1):
            for m, c in self.row(n).items():
                yield n, m, c

    def perturbed(self, m: int, n: int, delta: int = 1) -> StatTable:
        rows = {k: dict(v) for k, v in self.rows.items()}
        rows.setdefault(n, {})
        rows[n][m] = rows[n].get(m, 0) + delta
        return StatTable(self.kind, self.cap, self.nmax, rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["n", "m", "value"])
        w.writerows(self.entries())
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "N": self.cap,
            "nmax": self.nmax,
            "rows": [[n, m, c] for n, m, c in self.entries()],
        }

    @classmethod
    def from_json(cls, data: dict) -> StatTable:
        rows: dict[int, dict[int, int]] = {}
        for n, m, c in data["rows"]:
            rows.setdefault(n, {})[m] = c
        return cls(data["kind"], data["N"], data["nmax"], rows)


# -- per-component generating tables ---------------------------------------------

def signed_distinct_counts(lo: int, hi: int, nmax: int) -> list[int]:
    """Coefficients of prod_{i=lo..hi} (1 - q^i) up to q^nmax."""
    c = [0] * (nmax + 1)
    c[0] = 1
    for part in range(max(lo, 1), hi + 1):
        for s in range(nmax, part - 1, -1):
            c[s] -= c[s - part]
    return c


def parts_count_table(N: int, nmax: int) -> list[dict[int, int]]:
    """table[s][c] = number of partitions of s into c parts, each part <= N."""
    table = [dict() for _ in range(nmax + 1)]
    table[0][0] = 1
    for part in range(1, N + 1):
        for s in range(part, nmax + 1):
            src = table[s - part]
            dst = table[s]
            for c, v in src.items():
                dst[c + 1] = dst.get(c + 1, 0) + v
    return table


@lru_cache(maxsize=8)
def _durfee_rank_counts(nmax: int) -> tuple[dict[tuple[int, int], int], ...]:
    # counts[s][(durfee, rank)] over all partitions of s; s = 0 is empty
    counts = []
    for s in range(nmax + 1):
        d: dict[tuple[int, int], int] = {}
        for p in enumerate_partitions(s):
            if p:
                key = (p.durfee, rank(p))
                d[key] = d.get(key, 0) + 1
        counts.append(d)
    return tuple(counts)


@lru_cache(maxsize=64)
def table_NS1(N: int, nmax: int) -> StatTable:
    """N_{S1}(m, n) for 1 <= n <= nmax."""
    if N < 1:
        raise ValueError("N must be >= 1")
    counts = _durfee_rank_counts(nmax)
    rows: dict[int, dict[int, int]] = {n: {} for n in range(1, nmax + 1)}
    for j in range(1, N + 1):
        window = signed_distinct_counts(N - j + 1, N, nmax)
        for n in range(1, nmax + 1):
            row = rows[n]
            for s in range(n - j * j + 1):
                w = window[s]
                if not w:
                    continue
                for (d, r), v in counts[n - s].items():
                    if d == j:
                        row[r] = row.get(r, 0) + w * v
    return StatTable(RANK_S1, N, nmax, rows)


@lru_cache(maxsize=64)
def table_MS2(N: int, nmax: int) -> StatTable:
    """M_{S2}(m, n) for 0 <= n <= nmax, by convolving the three component tables."""
    if N < 1:
        raise ValueError("N must be >= 1")
    signed = signed_distinct_counts(1, N, nmax)
    parts = parts_count_table(N, nmax)
    # pairs (pi2, pi3) by total size and #pi2 - #pi3
    pairs: list[dict[int, int]] = [dict() for _ in range(nmax + 1)]
    for b in range(nmax + 1):
        for d in range(nmax + 1 - b):
            tgt = pairs[b + d]
            for c2, v2 in parts[b].items():
                for c3, v3 in parts[d].items():
                    tgt[c2 - c3] = tgt.get(c2 - c3, 0) + v2 * v3
    rows: dict[int, dict[int, int]] = {}
    for n in range(nmax + 1):
        row: dict[int, int] = {}
        for a in range(n + 1):
            if not signed[a]:
                continue
            for m, v in pairs[n - a].items():
                row[m] = row.get(m, 0) + signed[a] * v
        rows[n] = row
    return StatTable(CRANK_S2, N, nmax, rows)


def table_MS2_bruteforce(N: int, nmax: int) -> StatTable:
    """Literal enumeration of the weighted triples; independent oracle for ``table_MS2``."""
    if nmax > BRUTEFORCE_LIMIT:
        raise ValueError(f"brute-force crank table limited to nmax <= {BRUTEFORCE_LIMIT}")
    distinct = [list(distinct_partitions(s, N)) for s in range(nmax + 1)]
    ordinary = [list(enumerate_partitions(s, N)) for s in range(nmax + 1)]
    rows: dict[int, dict[int, int]] = {}
    for n in range(nmax + 1):
        row: dict[int, int] = {}
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                for p1 in distinct[a]:
                    w = -1 if len(p1) % 2 else 1
                    for p2 in ordinary[b]:
                        for p3 in ordinary[c]:
                            m = len(p2) - len(p3)
                            row[m] = row.get(m, 0) + w
        rows[n] = row
    return StatTable(CRANK_S2, N, nmax, rows)


def table_NS1_bruteforce(N: int, nmax: int) -> StatTable:
    """Literal enumeration of the weighted pairs, summed over Durfee side j."""
    rows: dict[int, dict[int, int]] = {n: {} for n in range(1, nmax + 1)}
    for n in range(1, nmax + 1):
        row = rows[n]
        for j in range(1, N + 1):
            for a in range(n + 1):
                for p1 in distinct_partitions(a, N, N - j + 1):
                    w = -1 if len(p1) % 2 else 1
                    for p2 in enumerate_partitions(n - a):
                        if p2 and p2.durfee == j:
                            r = rank(p2)
                            row[r] = row.get(r, 0) + w
    return StatTable(RANK_S1, N, nmax, rows)


@lru_cache(maxsize=8)
def table_classical_rank(nmax: int) -> StatTable:
    rows: dict[int, dict[int, int]] = {}
    for n in range(1, nmax + 1):
        row: dict[int, int] = {}
        for p in enumerate_partitions(n):
            r = rank(p)
            row[r] = row.get(r, 0) + 1
        rows[n] = row
    return StatTable(RANK_CLASSICAL, None, nmax, rows)


@lru_cache(maxsize=8)
def table_classical_crank(nmax: int) -> StatTable:
    """M(m, n) read off the expansion of (q)_inf / ((zq)_inf (z^-1 q)_inf)."""
    from .qfunctions import euler_product
    from .series import ZQSeries, zq_invert_factor

    gf = ZQSeries.from_qseries(euler_product(nmax))
    for i in range(1, nmax + 1):
        gf = gf * zq_invert_factor(1, i, nmax) * zq_invert_factor(-1, i, nmax)
    rows = {n: dict(gf.slices[n]) for n in range(nmax + 1)}
    return StatTable(CRANK_CLASSICAL, None, nmax, rows)


def durfee_counts(n: int) -> dict[int, int]:
    """Number of partitions of n for each Durfee side."""
    out: dict[int, int] = {}
    for p in enumerate_partitions(n):
        out[p.durfee] = out.get(p.durfee, 0) + 1
    return out

