"""Closed-form generating functions, Bailey pairs, and coefficient-level identity checks.

Every ``check_*`` function builds the two sides of an identity as truncated
series and compares them coefficient by coefficient, returning a
:class:`VerificationReport`.  The ``tamper`` keyword, when given, is applied
to the left-hand side before comparison; it exists for negative controls.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .moments import (
    moment_series,
    reconstruct_moment,
    sstar,
    symmetrized_series,
    symmetrized_via_g,
)
from .partitions import (
    CRANK_CLASSICAL,
    CRANK_S2,
    RANK_CLASSICAL,
    RANK_S1,
    StatTable,
    spt_finite,
    table_classical_crank,
    table_classical_rank,
    table_MS2,
    table_NS1,
)
from .qfunctions import euler_product, gaussian_binomial, pochhammer, pochhammer_scaled
from .series import QSeries, ZQSeries, zq_invert_factor

RANK_PENT = 3  # quadratic exponent n(3n -+ 1)/2
CRANK_PENT = 1  # quadratic exponent n(n -+ 1)/2


# -- reports -------------------------------------------------------------------

@dataclass(frozen=True)
class Mismatch:
    degree: int
    lhs: object
    rhs: object
    z_exponent: int | None = None
    index: int | None = None

    def to_json(self) -> dict:
        out = {"degree": self.degree, "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs)}
        if self.z_exponent is not None:
            out["z_exponent"] = self.z_exponent
        if self.index is not None:
            out["index"] = self.index
        return out


@dataclass
class VerificationReport:
    identity: str
    params: dict
    passed: bool
    first_mismatch: Mismatch | None = None
    elapsed: float = 0.0
    note: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "identity": self.identity,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "status": self.status,
            "first_mismatch": self.first_mismatch.to_json() if self.first_mismatch else None,
        }
        if self.note:
            out["note"] = self.note
        if timing:
            out["elapsed"] = self.elapsed
        return out

    def to_text(self) -> str:
        params = " ".join(f"{k}={_jsonable(v)}" for k, v in self.params.items())
        line = f"[{self.status.upper()}] {self.identity} {params}"
        if self.first_mismatch:
            mm = self.first_mismatch
            where = f"q^{mm.degree}"
            if mm.z_exponent is not None:
                where += f" z^{mm.z_exponent}"
            if mm.index is not None:
                where = f"n={mm.index} " + where
            line += f"\n    first mismatch at {where}: lhs={mm.lhs} rhs={mm.rhs}"
        return line


def _jsonable(v):
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def first_mismatch(lhs, rhs, index: int | None = None) -> Mismatch | None:
    """Lowest-degree disagreement between two QSeries or two ZQSeries."""
    if lhs.order != rhs.order:
        raise ValueError("cannot compare series of different truncation orders")
    if isinstance(lhs, ZQSeries):
        for n, (a, b) in enumerate(zip(lhs.slices, rhs.slices)):
            if a != b:
                m = min(x for x in set(a) | set(b) if a.get(x, 0) != b.get(x, 0))
                return Mismatch(n, a.get(m, 0), b.get(m, 0), z_exponent=m, index=index)
        return None
    for n, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            return Mismatch(n, a, b, index=index)
    return None


def compare(identity: str, params: dict, lhs, rhs, started: float,
            tamper: Callable | None = None, note: str = "") -> VerificationReport:
    if tamper is not None:
        lhs = tamper(lhs)
    mm = first_mismatch(lhs, rhs)
    return VerificationReport(identity, params, mm is None, mm, time.perf_counter() - started, note)


# -- helpers -------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _inv_pochhammer(n: int, order: int) -> QSeries:
    return pochhammer(n, order).invert()


@lru_cache(maxsize=4096)
def _inv_one_minus_pow(n: int, power: int, order: int) -> QSeries:
    """1 / (1 - q^n)^power."""
    return (QSeries.one(order) - QSeries.monomial(n, order)).invert() ** power


@lru_cache(maxsize=512)
def _zq_denominator(j: int, order: int) -> ZQSeries:
    """1 / ((zq)_j (z^-1 q)_j)."""
    out = ZQSeries.one(order)
    for i in range(1, j + 1):
        if i > order:
            break
        out = out * zq_invert_factor(1, i, order) * zq_invert_factor(-1, i, order)
    return out


def _one_minus_z(order: int) -> ZQSeries:
    slices = [{} for _ in range(order + 1)]
    slices[0] = {0: 1, 1: -1}
    return ZQSeries(slices, order)


def table_to_zq(table: StatTable, order: int) -> ZQSeries:
    if order > table.nmax:
        raise ValueError(f"table built to n={table.nmax}, need {order}")
    slices = [dict(table.row(n)) if n >= table.min_n else {} for n in range(order + 1)]
    return ZQSeries(slices, order)


# -- bivariate generating functions ---------------------------------------------

def rs1_series(N: int, order: int) -> ZQSeries:
    """sum_{j=1}^N [N j] q^{j^2} (q)_j / ((zq)_j (z^-1 q)_j)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    total = ZQSeries.zero(order)
    for j in range(1, N + 1):
        if j * j > order:
            break
        num = (gaussian_binomial(N, j, order) * pochhammer(j, order)).shift(j * j)
        total = total + _zq_denominator(j, order) * num
    return total


def cs2_series(N: int, order: int) -> ZQSeries:
    """(q)_N / ((zq)_N (z^-1 q)_N)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return _zq_denominator(N, order) * pochhammer(N, order)


def _bivariate_rhs(N: int, order: int, pent: int) -> ZQSeries:
    # 1/(q)_N + (1-z) sum_n [N n] (-1)^n (q)_n q^{n(pent*n+1)/2} / (q)_{N+n}
    #                        * (1/(1 - z q^n) - z^-1/(1 - z^-1 q^n))
    out = ZQSeries.from_qseries(_inv_pochhammer(N, order))
    one_minus_z = _one_minus_z(order)
    for n in range(1, N + 1):
        e = n * (pent * n + 1) // 2
        if e > order:
            break
        coeff = gaussian_binomial(N, n, order) * pochhammer(n, order) * _inv_pochhammer(N + n, order)
        coeff = coeff.shift(e) * (-1) ** n
        bracket = zq_invert_factor(1, n, order) - zq_invert_factor(-1, n, order).zshift(-1)
        out = out + one_minus_z * bracket * coeff
    return out


def check_bivariate_identity_32(N: int, order: int, tamper=None) -> VerificationReport:
    """Finite rank-type partial-fraction identity, both sides expanded in (z, q)."""
    t0 = time.perf_counter()
    lhs = ZQSeries.one(order) + rs1_series(N, order)
    rhs = _bivariate_rhs(N, order, RANK_PENT)
    return compare("eq3.2", {"N": N, "Q": order}, lhs, rhs, t0, tamper)


def check_bivariate_identity_35(N: int, order: int, tamper=None) -> VerificationReport:
    """Finite crank-type alternating-sum identity, both sides expanded in (z, q)."""
    t0 = time.perf_counter()
    lhs = cs2_series(N, order)
    rhs = _bivariate_rhs(N, order, CRANK_PENT)
    return compare("eq3.5", {"N": N, "Q": order}, lhs, rhs, t0, tamper)


def check_rank_gf(N: int, order: int, table: StatTable | None = None, tamper=None) -> VerificationReport:
    """Bivariate rank generating function against the combinatorial rank table."""
    t0 = time.perf_counter()
    table = table or table_NS1(N, order)
    return compare("rank-gf", {"N": N, "Q": order}, table_to_zq(table, order),
                   rs1_series(N, order), t0, tamper)


def check_crank_gf(N: int, order: int, table: StatTable | None = None, tamper=None) -> VerificationReport:
    """Bivariate crank generating function against the combinatorial crank table."""
    t0 = time.perf_counter()
    table = table or table_MS2(N, order)
    return compare("crank-gf", {"N": N, "Q": order}, table_to_zq(table, order),
                   cs2_series(N, order), t0, tamper)


# -- symmetrized-moment generating functions --------------------------------------

def alternating_sum(N: int, k: int, order: int, pent: int) -> QSeries:
    """sum_{n=1}^N (-1)^{n-1} q^{n(pent*n-1)/2 + kn} (1+q^n) / ((q)_{N+n} (q)_{N-n} (1-q^n)^{2k})."""
    total = QSeries.zero(order)
    for n in range(1, N + 1):
        e = n * (pent * n - 1) // 2 + k * n
        if e > order:
            break
        num = QSeries.monomial(e, order) + QSeries.monomial(e + n, order)
        den = (_inv_pochhammer(N + n, order) * _inv_pochhammer(N - n, order)
               * _inv_one_minus_pow(n, 2 * k, order))
        term = num * den
        total = total + term if n % 2 else total - term
    return total


def _symmetric_sum(N: int, k: int, order: int, pent: int) -> QSeries:
    # sum over n = -N..N, n != 0, of (-1)^{n-1} q^{n(pent*n+1)/2 + kn} / ((q)_{N+n}(q)_{N-n}(1-q^n)^{2k});
    # for n < 0, 1/(1-q^n)^{2k} = q^{2k|n|}/(1-q^|n|)^{2k}
    total = QSeries.zero(order)
    for n in range(-N, N + 1):
        if n == 0:
            continue
        a = abs(n)
        e = n * (pent * n + 1) // 2 + k * n + (2 * k * a if n < 0 else 0)
        if e > order:
            continue
        den = (_inv_pochhammer(N + n, order) * _inv_pochhammer(N - n, order)
               * _inv_one_minus_pow(a, 2 * k, order))
        term = den.shift(e)
        total = total + term if n % 2 else total - term
    return total


def _closed_form(N: int, nu: int, order: int, pent: int, name: str) -> QSeries:
    if N < 1 or nu < 1:
        raise ValueError("N and nu must be >= 1")
    pref = pochhammer(N, order)
    half = pref * alternating_sum(N, nu, order, pent)
    sym = pref * _symmetric_sum(N, nu, order, pent)
    mm = first_mismatch(half, sym)
    if mm is not None:
        raise ArithmeticError(f"{name}: the two closed forms disagree at q^{mm.degree}")
    return half.assert_integral(name)


def gf_eta_rhs(N: int, nu: int, order: int) -> QSeries:
    """Closed form of sum_n eta_{2nu,N}(n) q^n."""
    return _closed_form(N, nu, order, RANK_PENT, "gf_eta_rhs")


def gf_mu_rhs(N: int, nu: int, order: int) -> QSeries:
    """Closed form of sum_n mu_{2nu,N}(n) q^n."""
    return _closed_form(N, nu, order, CRANK_PENT, "gf_mu_rhs")


def check_theorem_22(N: int, nu: int, order: int, table: StatTable | None = None, tamper=None):
    t0 = time.perf_counter()
    table = table or table_NS1(N, order)
    lhs = symmetrized_series(table, 2 * nu, order)
    return compare("thm2.2", {"N": N, "nu": nu, "Q": order}, lhs, gf_eta_rhs(N, nu, order), t0, tamper)


def check_theorem_26(N: int, nu: int, order: int, table: StatTable | None = None, tamper=None):
    t0 = time.perf_counter()
    table = table or table_MS2(N, order)
    lhs = symmetrized_series(table, 2 * nu, order)
    return compare("thm2.6", {"N": N, "nu": nu, "Q": order}, lhs, gf_mu_rhs(N, nu, order), t0, tamper)


# -- chain multisums ---------------------------------------------------------------

def multisum_core(N: int, k: int, order: int, weight=None) -> QSeries:
    """Sum over chains N >= n_k >= ... >= n_1 >= 1 of w(n_1) prod_i q^{n_i}/(1-q^{n_i})^2.

    ``weight`` is None (w = 1), ``"pochhammer"`` (w = (q)_{n_1}), or a callable
    ``n -> QSeries``.  Evaluated one chain index at a time with prefix sums.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if weight is None:
        w = lambda n: None  # noqa: E731
    elif weight == "pochhammer":
        w = lambda n: pochhammer(n, order)  # noqa: E731
    elif callable(weight):
        w = weight
    else:
        raise ValueError(f"unknown weight {weight!r}")
    top = min(N, order)
    f = {n: _inv_one_minus_pow(n, 2, order).shift(n) for n in range(1, top + 1)}
    layer = {}
    for n in range(1, top + 1):
        wn = w(n)
        layer[n] = f[n] if wn is None else f[n] * wn
    for _ in range(k - 1):
        prefix = QSeries.zero(order)
        new = {}
        for n in range(1, top + 1):
            prefix = prefix + layer[n]
            new[n] = f[n] * prefix
        layer = new
    total = QSeries.zero(order)
    for s in layer.values():
        total = total + s
    return total


def check_corollary_52(N: int, k: int, order: int, tamper=None) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = pochhammer(N, order) ** 2 * alternating_sum(N, k, order, CRANK_PENT)
    return compare("cor5.2", {"N": N, "k": k, "Q": order}, lhs, multisum_core(N, k, order), t0, tamper)


def check_corollary_53(N: int, k: int, order: int, table: StatTable | None = None,
                       against: str = "tables", tamper=None) -> VerificationReport:
    """Multisum form of sum mu_{2k,N}(n) q^n against the tables or the alternating closed form."""
    t0 = time.perf_counter()
    rhs = multisum_core(N, k, order) * _inv_pochhammer(N, order)
    if against == "tables":
        lhs = symmetrized_series(table or table_MS2(N, order), 2 * k, order)
    elif against == "closed-form":
        lhs = gf_mu_rhs(N, k, order)
    else:
        raise ValueError("against must be 'tables' or 'closed-form'")
    return compare("cor5.3", {"N": N, "k": k, "Q": order, "against": against}, lhs, rhs, t0, tamper)


def check_corollary_54(N: int, k: int, order: int, tamper=None) -> VerificationReport:
    t0 = time.perf_counter()
    lhs = multisum_core(N, k, order, weight="pochhammer")
    rhs = multisum_core(N, k, order) - pochhammer(N, order) ** 2 * alternating_sum(N, k, order, RANK_PENT)
    return compare("cor5.4", {"N": N, "k": k, "Q": order}, lhs, rhs, t0, tamper)


def check_theorem_28(N: int, k: int, order: int, rank_table: StatTable | None = None,
                     crank_table: StatTable | None = None, tamper=None) -> VerificationReport:
    """sum (mu_{2k,N} - eta_{2k,N}) q^n against the weighted multisum; at k=1 also against spt(n, N)."""
    t0 = time.perf_counter()
    rank_table = rank_table or table_NS1(N, order)
    crank_table = crank_table or table_MS2(N, order)
    lhs = symmetrized_series(crank_table, 2 * k, order) - symmetrized_series(rank_table, 2 * k, order)
    rhs = multisum_core(N, k, order, weight="pochhammer") * _inv_pochhammer(N, order)
    params = {"N": N, "k": k, "Q": order}
    report = compare("thm2.8", params, lhs, rhs, t0, tamper)
    if report.passed and k == 1:
        spt_series = QSeries([0] + [spt_finite(n, N) for n in range(1, order + 1)], order)
        report = compare("thm2.8", params, spt_series, rhs, t0, note="k=1: coefficients equal spt(n, N)")
    return report


def check_theorem_11(N: int, order: int, rank_table: StatTable | None = None,
                     crank_table: StatTable | None = None, tamper=None) -> VerificationReport:
    """spt(n, N) = (M_{2,N}(n) - N_{2,N}(n)) / 2 for 1 <= n <= order."""
    t0 = time.perf_counter()
    rank_table = rank_table or table_NS1(N, order)
    crank_table = crank_table or table_MS2(N, order)
    lhs = QSeries([0] + [spt_finite(n, N) for n in range(1, order + 1)], order)
    rhs = (moment_series(crank_table, 2, order) - moment_series(rank_table, 2, order)).scale(Fraction(1, 2))
    return compare("thm1.1", {"N": N, "Q": order}, lhs, rhs, t0, tamper)


# -- Bailey pairs --------------------------------------------------------------------

@dataclass
class BaileyPair:
    """Sequences n -> alpha_n, n -> beta_n of series truncated at ``order``."""

    name: str
    order: int
    alpha_fn: Callable[[int], QSeries] = field(repr=False)
    beta_fn: Callable[[int], QSeries] = field(repr=False)
    a: Fraction = Fraction(1)

    def __post_init__(self):
        self.a = Fraction(self.a)
        self._alpha = lru_cache(maxsize=None)(self.alpha_fn)
        self._beta = lru_cache(maxsize=None)(self.beta_fn)

    def alpha(self, n: int) -> QSeries:
        return self._alpha(n)

    def beta(self, n: int) -> QSeries:
        return self._beta(n)


def crank_pair(order: int) -> BaileyPair:
    """alpha_n = (-1)^n q^{n(n-1)/2} (1+q^n), beta_n = 0 for n >= 1."""

    def alpha(n):
        if n == 0:
            return QSeries.one(order)
        e = n * (n - 1) // 2
        return (QSeries.monomial(e, order) + QSeries.monomial(e + n, order)) * (-1) ** n

    def beta(n):
        return QSeries.one(order) if n == 0 else QSeries.zero(order)

    return BaileyPair("crank", order, alpha, beta)


def rank_pair(order: int) -> BaileyPair:
    """alpha_n = (-1)^n q^{n(3n-1)/2} (1+q^n), beta_n = 1/(q)_n."""

    def alpha(n):
        if n == 0:
            return QSeries.one(order)
        e = n * (3 * n - 1) // 2
        return (QSeries.monomial(e, order) + QSeries.monomial(e + n, order)) * (-1) ** n

    def beta(n):
        return _inv_pochhammer(n, order)

    return BaileyPair("rank", order, alpha, beta)


BUILTIN_PAIRS = {"crank": crank_pair, "rank": rank_pair}


def bailey_check(pair: BaileyPair, nmax: int, tamper=None) -> VerificationReport:
    """beta_n = sum_{r=0}^n alpha_r / ((q)_{n-r} (aq)_{n+r}) for every n <= nmax.

    Denominators are expanded by series inversion; no clearing of denominators.
    """
    t0 = time.perf_counter()
    Q = pair.order
    params = {"pair": pair.name, "a": pair.a, "nmax": nmax, "Q": Q}
    for n in range(nmax + 1):
        rhs = QSeries.zero(Q)
        for r in range(n + 1):
            den = pochhammer(n - r, Q) * pochhammer_scaled(pair.a, 1, n + r, Q)
            rhs = rhs + pair.alpha(r) * den.invert()
        lhs = pair.beta(n)
        if tamper is not None:
            lhs = tamper(n, lhs)
        mm = first_mismatch(lhs, rhs, index=n)
        if mm is not None:
            return VerificationReport("bailey", params, False, mm, time.perf_counter() - t0)
    return VerificationReport("bailey", params, True, None, time.perf_counter() - t0)


def bailey_transform(pair: BaileyPair, rho1, rho2) -> BaileyPair:
    """One application of Bailey's lemma at exact rational rho1, rho2."""
    rho1, rho2 = Fraction(rho1), Fraction(rho2)
    if rho1 == 0 or rho2 == 0:
        raise ZeroDivisionError("rho1 and rho2 must be nonzero")
    Q, a = pair.order, pair.a
    c = a / (rho1 * rho2)

    def den(n):
        # 1 / ((aq/rho1)_n (aq/rho2)_n)
        return (pochhammer_scaled(a / rho1, 1, n, Q) * pochhammer_scaled(a / rho2, 1, n, Q)).invert()

    def rho_poch(n):
        return pochhammer_scaled(rho1, 0, n, Q) * pochhammer_scaled(rho2, 0, n, Q)

    def alpha(n):
        return (rho_poch(n) * den(n) * pair.alpha(n)).shift(n).scale(c**n)

    def beta(n):
        total = QSeries.zero(Q)
        for k in range(n + 1):
            num = rho_poch(k) * pochhammer_scaled(c, 1, n - k, Q) * _inv_pochhammer(n - k, Q)
            total = total + (num * pair.beta(k)).shift(k).scale(c**k)
        return total * den(n)

    return BaileyPair(f"{pair.name}'({rho1},{rho2})", Q, alpha, beta, a)


def check_prop_51(pair: BaileyPair, k: int, N: int, tamper=None) -> VerificationReport:
    """Chain multisum weighted by (q)_{n_1}^2 beta_{n_1} against the unweighted one plus the alpha-sum."""
    t0 = time.perf_counter()
    Q = pair.order
    one = QSeries.one(Q)
    if pair.a != 1 or pair.alpha(0) != one or pair.beta(0) != one:
        raise ValueError("requires a Bailey pair with a = 1 and alpha_0 = beta_0 = 1")
    lhs = multisum_core(N, k, Q, weight=lambda n: pochhammer(n, Q) ** 2 * pair.beta(n))
    rhs = multisum_core(N, k, Q)
    pref = pochhammer(N, Q) ** 2
    for r in range(1, N + 1):
        if k * r > Q:
            break
        term = (pref * _inv_pochhammer(N - r, Q) * _inv_pochhammer(N + r, Q)
                * _inv_one_minus_pow(r, 2 * k, Q) * pair.alpha(r)).shift(k * r)
        rhs = rhs + term
    return compare("prop5.1", {"pair": pair.name, "k": k, "N": N, "Q": Q}, lhs, rhs, t0, tamper)


# -- classical (uncapped) generating functions --------------------------------------

def _classical(k: int, order: int, pent: int) -> QSeries:
    if k < 1:
        raise ValueError("k must be >= 1")
    total = QSeries.zero(order)
    n = 1
    while n * (pent * n - 1) // 2 + k * n <= order:
        e = n * (pent * n - 1) // 2 + k * n
        term = (QSeries.monomial(e, order) + QSeries.monomial(e + n, order)) * _inv_one_minus_pow(n, 2 * k, order)
        total = total + term if n % 2 else total - term
        n += 1
    return total * euler_product(order).invert()


def classical_gf_eta(k: int, order: int) -> QSeries:
    """sum_n eta_{2k}(n) q^n for ordinary partitions."""
    return _classical(k, order, RANK_PENT)


def classical_gf_mu(k: int, order: int) -> QSeries:
    """sum_n mu_{2k}(n) q^n for ordinary partitions."""
    return _classical(k, order, CRANK_PENT)


def check_classical_degeneration(N: int, nu: int, order: int, tamper=None) -> list[VerificationReport]:
    """Finite closed forms agree with the classical ones on q^n, n <= min(N, order)."""
    low = min(N, order)
    out = []
    for name, finite, classical in (("eta", gf_eta_rhs, classical_gf_eta), ("mu", gf_mu_rhs, classical_gf_mu)):
        t0 = time.perf_counter()
        lhs = finite(N, nu, order).truncate(low)
        rhs = classical(nu, order).truncate(low)
        out.append(compare(f"classical-{name}", {"N": N, "nu": nu, "Q": order}, lhs, rhs, t0, tamper))
    return out


def check_classical_tables(N: int, nmax: int, tamper=None) -> list[VerificationReport]:
    """For n <= min(N, nmax) the finite tables coincide with N(m, n) and M(m, n)."""
    low = min(N, nmax)
    out = []
    for name, finite, classical in (("rank", table_NS1(N, nmax), table_classical_rank(nmax)),
                                    ("crank", table_MS2(N, nmax), table_classical_crank(nmax))):
        t0 = time.perf_counter()
        out.append(compare(f"classical-{name}-table", {"N": N, "nmax": nmax},
                           table_to_zq(finite, low), table_to_zq(classical, low), t0, tamper))
    return out


# -- moment reconstruction and odd vanishing ----------------------------------------

def check_fg(table: StatTable, k: int, order: int, tamper=None) -> list[VerificationReport]:
    """g-polynomial form of the symmetrized moment and S*-reconstruction of the 2k-th moment."""
    crank = table.kind in (CRANK_S2, CRANK_CLASSICAL)
    sym_id, rec_id = ("fg1", "fg3") if crank else ("fg2", "fg4")
    params = {"N": table.cap, "k": k, "Q": order}
    tri = sstar(k)
    t0 = time.perf_counter()
    direct = symmetrized_series(table, 2 * k, order)
    via_g = QSeries([0] + [symmetrized_via_g(table, k, n) for n in range(1, order + 1)], order)
    r1 = compare(sym_id, params, via_g, direct, t0, tamper)
    t0 = time.perf_counter()
    moments = moment_series(table, 2 * k, order)
    rebuilt = QSeries([0] + [reconstruct_moment(table, k, n, tri) for n in range(1, order + 1)], order)
    r2 = compare(rec_id, params, rebuilt, moments, t0, tamper)
    return [r1, r2]


def check_odd_vanishing(table: StatTable, k: int, order: int, tamper=None) -> VerificationReport:
    """Odd ordinary and odd symmetrized moments vanish identically."""
    if k % 2 == 0:
        raise ValueError("k must be odd")
    t0 = time.perf_counter()
    kind = "rank" if table.kind in (RANK_S1, RANK_CLASSICAL) else "crank"
    params = {"table": kind, "N": table.cap, "k": k, "Q": order}
    zero = QSeries.zero(order)
    report = compare("odd", params, moment_series(table, k, order), zero, t0, tamper)
    if report.passed:
        report = compare("odd", params, symmetrized_series(table, k, order), zero, t0, tamper)
    return report
