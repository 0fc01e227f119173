"""q-Pochhammer symbols and Gaussian binomials as truncated series."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .series import QSeries

#: marker for an infinite product; factors beyond q^Q are dropped
INFINITY = None


def _times_one_minus(s: QSeries, coeff, exponent: int) -> QSeries:
    """``s * (1 - coeff * q**exponent)``."""
    if exponent > s.order or not coeff:
        return s
    c = list(s.coeffs)
    for i in range(s.order, exponent - 1, -1):
        if s.coeffs[i - exponent]:
            c[i] -= coeff * s.coeffs[i - exponent]
    return QSeries(c, s.order)


@lru_cache(maxsize=4096)
def pochhammer(n: int, order: int) -> QSeries:
    """(q; q)_n truncated at q^order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return QSeries.one(order)
    return _times_one_minus(pochhammer(n - 1, order), 1, n)


def pochhammer_shifted(a: int, n: int | None, order: int) -> QSeries:
    """(q^a; q)_n; pass ``n=INFINITY`` for the infinite product."""
    if a < 1:
        raise ValueError("a must be >= 1")
    if n is INFINITY:
        n = max(order - a + 1, 0)
    elif n < 0:
        raise ValueError("n must be non-negative")
    s = QSeries.one(order)
    for i in range(n):
        if a + i > order:
            break
        s = _times_one_minus(s, 1, a + i)
    return s


def pochhammer_scaled(c, shift: int, n: int, order: int) -> QSeries:
    """Product of (1 - c q^{shift+i}) for i = 0..n-1, with c an exact rational.

    This is (c q^shift; q)_n. With ``shift = 0`` the constant term is
    (1 - c) and may vanish.
    """
    if shift < 0:
        raise ValueError("shift must be non-negative")
    c = Fraction(c)
    s = QSeries.one(order)
    for i in range(n):
        e = shift + i
        if e == 0:
            s = s.scale(1 - c)
        else:
            s = _times_one_minus(s, c, e)
    return s


def euler_product(order: int) -> QSeries:
    """(q; q)_infinity truncated at q^order."""
    return pochhammer(order, order)


@lru_cache(maxsize=4096)
def gaussian_binomial(N: int, n: int, order: int) -> QSeries:
    """[N choose n]_q computed as (q)_N / ((q)_n (q)_{N-n})."""
    if n < 0 or n > N:
        return QSeries.zero(order)
    num = pochhammer(N, order)
    den = pochhammer(n, order) * pochhammer(N - n, order)
    return (num * den.invert()).assert_integral(f"gaussian_binomial({N}, {n})")
