"""Independent brute-force oracles for the test suite.

Nothing here calls the series inversion, the DP multisum, or the table
convolutions under test; everything is plain integer lists and enumeration.
"""

from __future__ import annotations

from itertools import combinations_with_replacement


def poly_mul(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= order:
                out[i + j] += x * y
    return out


def expand_product(factors, order):
    """Multiply out a list of integer polynomials term by term."""
    out = [1] + [0] * order
    for f in factors:
        out = poly_mul(out, f, order)
    return out


def one_minus_q_pow(i, order):
    f = [0] * (order + 1)
    f[0] = 1
    if i <= order:
        f[i] -= 1
    return f


def partitions_of(n, max_part=None):
    """Partitions as tuples, by plain recursion (order irrelevant)."""
    cap = n if max_part is None else max_part
    if n == 0:
        return [()]
    out = []
    for first in range(1, min(n, cap) + 1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def p(n):
    return len(partitions_of(n))


def spt_bruteforce(n, N=None):
    return sum(pi.count(min(pi)) for pi in partitions_of(n, N))


def q_pascal(N, n):
    """[N n]_q coefficients via [N n] = [N-1 n-1] + q^n [N-1 n]."""
    if n < 0 or n > N:
        return [0]
    if n == 0 or n == N:
        return [1]
    a = q_pascal(N - 1, n - 1)
    b = [0] * n + q_pascal(N - 1, n)
    size = max(len(a), len(b))
    a += [0] * (size - len(a))
    b += [0] * (size - len(b))
    return [x + y for x, y in zip(a, b)]


def geometric(n, power, order):
    """Coefficients of 1/(1-q^n)^power as a plain integer list, via repeated convolution."""
    base = [1 if e % n == 0 else 0 for e in range(order + 1)]
    out = [1] + [0] * order
    for _ in range(power):
        out = poly_mul(out, base, order)
    return out


def multisum_chains(N, k, order, weight=None):
    """Sum over every chain N >= n_k >= ... >= n_1 >= 1, enumerated explicitly.

    ``weight`` maps n_1 to an integer coefficient list (default 1).
    """
    total = [0] * (order + 1)
    for chain in combinations_with_replacement(range(1, N + 1), k):
        # chain is sorted ascending: chain[0] = n_1
        term = [1] + [0] * order
        for n in chain:
            shifted = [0] * (order + 1)
            g = geometric(n, 2, order)
            for e in range(order + 1 - n):
                shifted[e + n] = g[e]
            term = poly_mul(term, shifted, order)
        if weight is not None:
            term = poly_mul(term, weight(chain[0]), order)
        total = [x + y for x, y in zip(total, term)]
    return total


def rank_table_direct(n):
    out = {}
    for pi in partitions_of(n):
        r = max(pi) - len(pi)
        out[r] = out.get(r, 0) + 1
    return out
