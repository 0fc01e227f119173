"""Ordinary and symmetrized moments of rank/crank tables, and the moment inequality."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import factorial

from .partitions import StatTable, spt_finite, table_MS2, table_NS1
from .series import QSeries


def gen_binomial(a: int, k: int) -> int:
    """C(a, k) = a(a-1)...(a-k+1)/k! for any integer a."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= a - i
    return num // factorial(k)


def _check_n(table: StatTable, n: int):
    if not table.min_n <= n <= table.nmax:
        raise IndexError(f"n={n} outside table range {table.min_n}..{table.nmax}")


def moment(table: StatTable, k: int, n: int) -> int:
    _check_n(table, n)
    return sum(m**k * c for m, c in table.row(n).items())


def symmetrized_moment(table: StatTable, k: int, n: int) -> int:
    """Sum of C(m + floor((k-1)/2), k) * c(m, n) over m."""
    if k < 1:
        raise ValueError("k must be positive")
    _check_n(table, n)
    shift = (k - 1) // 2
    return sum(gen_binomial(m + shift, k) * c for m, c in table.row(n).items())


def moment_series(table: StatTable, k: int, order: int) -> QSeries:
    """Sum over n >= 1 of moment(table, k, n) q^n."""
    if order > table.nmax:
        raise ValueError(f"table built to n={table.nmax}, need {order}")
    return QSeries([0] + [moment(table, k, n) for n in range(1, order + 1)], order)


def symmetrized_series(table: StatTable, k: int, order: int) -> QSeries:
    if order > table.nmax:
        raise ValueError(f"table built to n={table.nmax}, need {order}")
    return QSeries([0] + [symmetrized_moment(table, k, n) for n in range(1, order + 1)], order)


def g_poly_eval(k: int, x: int) -> int:
    """prod_{j=0}^{k-1} (x^2 - j^2)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = 1
    for j in range(k):
        out *= x * x - j * j
    return out


@dataclass(frozen=True)
class SStarTriangle:
    rows: tuple[tuple[int, ...], ...]  # rows[n-1][k-1] = S*(n, k)

    @property
    def nmax(self) -> int:
        return len(self.rows)

    def __call__(self, n: int, k: int) -> int:
        if not 1 <= n <= self.nmax:
            raise IndexError(f"row {n} not in triangle of {self.nmax} rows")
        if k < 1 or k > n:
            return 0
        return self.rows[n - 1][k - 1]


def sstar(nmax: int) -> SStarTriangle:
    """Triangle of S*(n, k), validated against x^{2n} = sum_k S*(n,k) g_k(x) at x = 0..n."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    rows = [(1,)]
    for n in range(1, nmax):
        prev = rows[-1]
        get = lambda k: prev[k - 1] if 1 <= k <= n else 0  # noqa: E731
        rows.append(tuple(get(k - 1) + k * k * get(k) for k in range(1, n + 2)))
    tri = SStarTriangle(tuple(rows))
    for n in range(1, nmax + 1):
        for x in range(n + 1):
            rhs = sum(tri(n, k) * g_poly_eval(k, x) for k in range(1, n + 1))
            if rhs != x ** (2 * n):
                raise ArithmeticError(f"S* row {n} fails the power identity at x={x}")
    return tri


def symmetrized_via_g(table: StatTable, k: int, n: int) -> int:
    """(1/(2k)!) * sum_m g_k(m) c(m, n); the division must be exact."""
    _check_n(table, n)
    total = sum(g_poly_eval(k, m) * c for m, c in table.row(n).items())
    q, r = divmod(total, factorial(2 * k))
    if r:
        raise ArithmeticError(f"g-weighted sum {total} not divisible by (2*{k})!")
    return q


def reconstruct_moment(table: StatTable, k: int, n: int, triangle: SStarTriangle | None = None) -> int:
    """2k-th moment rebuilt from symmetrized moments: sum_j (2j)! S*(k,j) sym_{2j}(n)."""
    triangle = triangle or sstar(k)
    if k > triangle.nmax:
        raise ValueError(f"triangle has {triangle.nmax} rows, need {k}")
    return sum(
        factorial(2 * j) * triangle(k, j) * symmetrized_moment(table, 2 * j, n)
        for j in range(1, k + 1)
    )


def spt_k_finite(n: int, N: int, k: int, rank_table: StatTable | None = None,
                 crank_table: StatTable | None = None) -> int:
    """mu_{2k,N}(n) - eta_{2k,N}(n)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rank_table = rank_table or table_NS1(N, n)
    crank_table = crank_table or table_MS2(N, n)
    return symmetrized_moment(crank_table, 2 * k, n) - symmetrized_moment(rank_table, 2 * k, n)


@dataclass
class ScanPoint:
    N: int
    k: int
    n: int
    crank_moment: int
    rank_moment: int
    spt_k: int
    spt: int

    @property
    def margin(self) -> int:
        return self.crank_moment - self.rank_moment

    def violations(self) -> list[str]:
        out = []
        if not self.margin > 0:
            out.append("crank moment not strictly above rank moment")
        if self.spt_k < 0:
            out.append("negative higher-order spt")
        if self.margin < 2 * self.spt:
            out.append("moment gap below 2*spt")
        return out

    def to_json(self) -> dict:
        return {"N": self.N, "k": self.k, "n": self.n, "M": self.crank_moment,
                "N_value": self.rank_moment, "margin": self.margin,
                "spt_k": self.spt_k, "spt": self.spt}


@dataclass
class ScanReport:
    grid: dict
    points: list[ScanPoint] = field(default_factory=list)
    violations: list[dict] = field(default_factory=list)
    checked: int = 0
    violation_count: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self) -> dict:
        return {"grid": self.grid, "violations": self.violations,
                "violation_count": self.violation_count,
                "checked": self.checked, "elapsed": self.elapsed}


def scan_cell(N: int, ks, ns) -> list[ScanPoint]:
    """All scan points for one cap N."""
    nmax = max(ns)
    rt, ct = table_NS1(N, nmax), table_MS2(N, nmax)
    spts = {n: spt_finite(n, N) for n in ns}
    return [
        ScanPoint(N, k, n, moment(ct, 2 * k, n), moment(rt, 2 * k, n),
                  spt_k_finite(n, N, k, rt, ct), spts[n])
        for k in ks for n in ns
    ]


def inequality_scan(N_range, k_range, n_range, cap: int = 10, executor=None) -> ScanReport:
    """Check M_{2k,N}(n) > N_{2k,N}(n), spt_k >= 0 and gap >= 2 spt over a grid.

    ``k`` is the half-order: the moments compared have order 2k.
    Up to ``cap`` violations are recorded; every point is checked regardless.
    """
    Ns, ks, ns = list(N_range), list(k_range), list(n_range)
    if not (Ns and ks and ns):
        raise ValueError("empty scan grid")
    if min(Ns) < 1 or min(ks) < 1 or min(ns) < 1:
        raise ValueError("scan ranges must be positive")
    start = time.perf_counter()
    if executor is None:
        cells = [scan_cell(N, ks, ns) for N in Ns]
    else:
        cells = list(executor.map(scan_cell, Ns, [ks] * len(Ns), [ns] * len(Ns)))
    report = ScanReport(grid={"N": Ns, "k": ks, "n": ns})
    for cell in cells:
        for pt in cell:
            report.points.append(pt)
            report.checked += 1
            for why in pt.violations():
                report.violation_count += 1
                if len(report.violations) < cap:
                    report.violations.append({**pt.to_json(), "reason": why})
    report.elapsed = time.perf_counter() - start
    return report
