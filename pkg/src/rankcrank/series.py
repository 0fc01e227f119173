"""Exact truncated power series in q, and in the pair (z, q).

Every series carries its truncation order ``Q`` (the largest retained
q-exponent, inclusive).  Arithmetic between series of different orders is
refused rather than silently re-truncated.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


class TruncationMismatch(ValueError):
    """Raised when two series with different truncation orders are combined."""


def _norm(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


def _check_order(a, b):
    if a.order != b.order:
        raise TruncationMismatch(f"truncation orders differ: {a.order} vs {b.order}")


class QSeries:
    """Dense truncated series c_0 + c_1 q + ... + c_Q q^Q with exact coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int):
        coeffs = tuple(_norm(c) for c in coeffs)
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        if len(coeffs) != order + 1:
            raise ValueError(f"expected {order + 1} coefficients, got {len(coeffs)}")
        self.order = order
        self.coeffs = coeffs

    # constructors

    @classmethod
    def zero(cls, order: int) -> QSeries:
        return cls((0,) * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> QSeries:
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff=1) -> QSeries:
        """``coeff * q**exponent``; vanishes when the exponent exceeds the order."""
        if exponent < 0:
            raise ValueError("negative q-exponent")
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    @classmethod
    def from_terms(cls, terms: Mapping[int, object], order: int) -> QSeries:
        """Build from ``{exponent: coeff}``; exponents beyond ``order`` are dropped."""
        c = [0] * (order + 1)
        for e, v in terms.items():
            if e < 0:
                raise ValueError("negative q-exponent")
            if e <= order:
                c[e] += v
        return cls(c, order)

    @classmethod
    def from_poly(cls, coeffs: Iterable, order: int) -> QSeries:
        """Truncate or zero-pad a polynomial coefficient list to ``order``."""
        c = list(coeffs)[: order + 1]
        c.extend([0] * (order + 1 - len(c)))
        return cls(c, order)

    # access

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = [f"{c}*q^{n}" for n, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{self.order + 1}))"

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def assert_integral(self, what: str = "series") -> QSeries:
        if not self.is_integral():
            bad = next(n for n, c in enumerate(self.coeffs) if not isinstance(c, int))
            raise ArithmeticError(f"{what}: non-integral coefficient {self.coeffs[bad]} at q^{bad}")
        return self

    def coefficient_sum(self):
        return sum(self.coeffs)

    # arithmetic

    def __add__(self, other: QSeries) -> QSeries:
        _check_order(self, other)
        return QSeries((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other: QSeries) -> QSeries:
        _check_order(self, other)
        return QSeries((a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __neg__(self) -> QSeries:
        return QSeries((-a for a in self.coeffs), self.order)

    def __mul__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other) -> QSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> QSeries:
        if k < 0:
            return qs_invert(self) ** (-k)
        result = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> QSeries:
        return QSeries((c * a for a in self.coeffs), self.order)

    def shift(self, k: int) -> QSeries:
        """Multiply by ``q**k`` (k >= 0) and truncate."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        if k > self.order:
            return QSeries.zero(self.order)
        return QSeries((0,) * k + self.coeffs[: self.order + 1 - k], self.order)

    def invert(self) -> QSeries:
        return qs_invert(self)

    def truncate(self, order: int) -> QSeries:
        """Explicitly drop every coefficient above ``order``."""
        if order > self.order:
            raise TruncationMismatch(f"cannot extend order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1], order)

    def with_coefficient(self, n: int, value) -> QSeries:
        c = list(self.coeffs)
        c[n] = value
        return QSeries(c, self.order)


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_sub(a: QSeries, b: QSeries) -> QSeries:
    return a - b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    _check_order(a, b)
    Q = a.order
    out = [0] * (Q + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(Q + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return QSeries(out, Q)


def qs_invert(a: QSeries) -> QSeries:
    """Multiplicative inverse by the triangular coefficient solve."""
    c0 = a.coeffs[0]
    if not c0:
        raise ZeroDivisionError("cannot invert a series with zero constant term")
    inv0 = Fraction(1, 1) / c0
    Q = a.order
    ac = a.coeffs
    b = [0] * (Q + 1)
    b[0] = _norm(inv0)
    unit = c0 in (1, -1)
    for n in range(1, Q + 1):
        s = 0
        for i in range(1, n + 1):
            if ac[i]:
                s += ac[i] * b[n - i]
        # int stays int when c0 is a unit
        b[n] = -s * c0 if unit else _norm(-s * inv0)
    return QSeries(b, Q)


class ZQSeries:
    """Series in q, truncated at q^Q, whose q^n coefficient is a Laurent polynomial in z.

    ``slices[n]`` maps a z-exponent to its (nonzero) coefficient.
    """

    __slots__ = ("order", "slices")

    def __init__(self, slices: Iterable[Mapping[int, object]], order: int):
        cleaned = []
        for sl in slices:
            cleaned.append({m: _norm(c) for m, c in sl.items() if c})
        if len(cleaned) != order + 1:
            raise ValueError(f"expected {order + 1} q-slices, got {len(cleaned)}")
        self.order = order
        self.slices = tuple(cleaned)

    @classmethod
    def zero(cls, order: int) -> ZQSeries:
        return cls([{}] * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> ZQSeries:
        return cls.from_qseries(QSeries.one(order))

    @classmethod
    def from_qseries(cls, s: QSeries, z_exponent: int = 0) -> ZQSeries:
        return cls(({z_exponent: c} for c in s.coeffs), s.order)

    def coefficient(self, m: int, n: int):
        return self.slices[n].get(m, 0)

    def bounds(self, n: int) -> tuple[int, int]:
        """Smallest and largest z-exponent present in the q^n slice, (0, 0) if empty."""
        sl = self.slices[n]
        if not sl:
            return (0, 0)
        return (min(sl), max(sl))

    def is_z_symmetric(self) -> bool:
        return all(sl.get(-m, 0) == c for sl in self.slices for m, c in sl.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZQSeries):
            return NotImplemented
        return self.order == other.order and self.slices == other.slices

    def __repr__(self) -> str:
        return f"ZQSeries(order={self.order}, slices={list(self.slices)!r})"

    def __add__(self, other: ZQSeries) -> ZQSeries:
        _check_order(self, other)
        out = []
        for a, b in zip(self.slices, other.slices):
            d = dict(a)
            for m, c in b.items():
                d[m] = d.get(m, 0) + c
            out.append(d)
        return ZQSeries(out, self.order)

    def __neg__(self) -> ZQSeries:
        return ZQSeries(({m: -c for m, c in sl.items()} for sl in self.slices), self.order)

    def __sub__(self, other: ZQSeries) -> ZQSeries:
        return self + (-other)

    def __mul__(self, other) -> ZQSeries:
        if isinstance(other, ZQSeries):
            return zq_mul(self, other)
        if isinstance(other, QSeries):
            return zq_mul(self, ZQSeries.from_qseries(other))
        if isinstance(other, (int, Fraction)):
            return ZQSeries(({m: other * c for m, c in sl.items()} for sl in self.slices), self.order)
        return NotImplemented

    __rmul__ = __mul__

    def truncate(self, order: int) -> ZQSeries:
        if order > self.order:
            raise TruncationMismatch(f"cannot extend order {self.order} to {order}")
        return ZQSeries(self.slices[: order + 1], order)

    def zshift(self, s: int) -> ZQSeries:
        """Multiply by ``z**s``."""
        return ZQSeries(({m + s: c for m, c in sl.items()} for sl in self.slices), self.order)

    def qshift(self, k: int) -> ZQSeries:
        """Multiply by ``q**k`` (k >= 0) and truncate."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        empty = [{}] * min(k, self.order + 1)
        return ZQSeries(empty + list(self.slices[: max(self.order + 1 - k, 0)]), self.order)


def zq_mul(a: ZQSeries, b: ZQSeries) -> ZQSeries:
    _check_order(a, b)
    Q = a.order
    out = [dict() for _ in range(Q + 1)]
    for i, sa in enumerate(a.slices):
        if not sa:
            continue
        for j in range(Q + 1 - i):
            sb = b.slices[j]
            if not sb:
                continue
            target = out[i + j]
            for ma, ca in sa.items():
                for mb, cb in sb.items():
                    m = ma + mb
                    target[m] = target.get(m, 0) + ca * cb
    return ZQSeries(out, Q)


def zq_invert_factor(s: int, t: int, order: int) -> ZQSeries:
    """Expansion of ``1 / (1 - z**s q**t)`` as sum of z^{su} q^{tu}, truncated at q^order.

    A factor ``1/(z - q**n)`` must be rewritten by the caller as
    ``z**-1 * 1/(1 - z**-1 q**n)`` before expansion.
    """
    if t < 1:
        raise ValueError("q-exponent t must be >= 1 for a q-adically convergent expansion")
    slices: list[dict] = [{} for _ in range(order + 1)]
    u = 0
    while t * u <= order:
        slices[t * u] = {s * u: 1}
        u += 1
    return ZQSeries(slices, order)


def zq_weighted_collapse(a: ZQSeries, k: int) -> QSeries:
    """q-series whose q^n coefficient is the sum over m of m**k * c(m, n)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return QSeries((sum(c * m**k for m, c in sl.items()) for sl in a.slices), a.order)
