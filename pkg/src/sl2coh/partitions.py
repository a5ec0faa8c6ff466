"""Partition counts: classical p(n), compositions, partitions into powers of p."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

Composition = tuple[int, ...]

_INT64_GUARD = 1 << 62


def partition_count(n: int) -> int:
    """Number of partitions of n (coin-change style dynamic program)."""
    if n < 0:
        return 0
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def partition_count_pentagonal(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence (independent check)."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for k in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[k - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p[n]


def compositions_count(n: int) -> int:
    if n < 1:
        raise ValueError("compositions are defined for n >= 1")
    # number of ways to cut n-1 gaps
    return 2 ** (n - 1)


def compositions_iter(n: int) -> Iterator[Composition]:
    """Every ordered tuple of positive integers summing to n, lexicographically."""
    if n < 1:
        raise ValueError("compositions are defined for n >= 1")

    def rec(rest: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        for first in range(1, rest + 1):
            yield from rec(rest - first, prefix + (first,))

    yield from rec(n, ())


@lru_cache(maxsize=None)
def _power_multisets(m: int, n: int, p: int) -> int:
    # multisets of n powers p^k (k >= 0) summing to m: peel off the
    # c copies of p^0, then divide the rest by p
    if n == 0:
        return int(m == 0)
    if m < n:
        return 0
    total = 0
    for c in range(m % p, min(n, m) + 1, p):
        total += _power_multisets((m - c) // p, n - c, p)
    return total


def count_pAn(m: int, n: int, p: int, min_exp: int = 0) -> int:
    """Partitions of m into exactly n parts, each a power p^k with k >= min_exp."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 0 or min_exp < 0:
        return 0
    scale = p**min_exp
    if m % scale:
        return 0
    return _power_multisets(m // scale, n, p)


def pAn_table(m_max: int, n_max: int, p: int) -> np.ndarray:
    """``T[n, m]`` = number of partitions of m into n powers of p (exponents >= 0).

    Vectorized form of the recursion behind :func:`count_pAn`; row n at
    index m reads row n at index (m - c)/p < m, so each row is filled in
    blocks [p^k, p^(k+1)).
    """
    T = np.zeros((n_max + 1, m_max + 1), dtype=np.int64)
    T[0, 0] = 1
    for n in range(1, n_max + 1):
        lo = 0
        while lo <= m_max:
            hi = min(m_max + 1, max(1, lo * p))
            for c in range(0, n + 1):
                # m = c + p*k for m in [lo, hi)
                start = c if c >= lo else lo + ((c - lo) % p)
                if start >= hi:
                    continue
                ms = np.arange(start, hi, p)
                T[n, ms] += T[n - c, (ms - c) // p]
            lo = hi
        if T[n].max(initial=0) >= _INT64_GUARD:
            raise OverflowError("partition table exceeded the int64 guard")
    return T


def count_B_Ac(m: int, c: Sequence[int], p: int) -> int:
    """Strictly increasing exponent vectors s with m == sum(c_i * p^s_i)."""
    c = tuple(c)
    if not c or any(x < 1 for x in c):
        raise ValueError("c must be a composition (positive parts)")
    if m <= 0:
        return 0
    tails = [sum(c[i:]) for i in range(len(c) + 1)]

    def rec(i: int, rest: int, min_s: int) -> int:
        if i == len(c):
            return int(rest == 0)
        total = 0
        w = p**min_s
        # remaining parts use exponents >= min_s, so rest >= tails[i] * p^min_s
        while tails[i] * w <= rest:
            left = rest - c[i] * w
            if left >= 0 and (i + 1 == len(c) or left % (w * p) == 0):
                total += rec(i + 1, left, min_s + 1)
            w *= p
            min_s += 1
        return total

    return rec(0, m, 0)


def B_Ac_table(c: Sequence[int], p: int, m_max: int) -> list[int]:
    """``counts[m] = count_B_Ac(m, c, p)`` for all m <= m_max in one pass.

    Walks every increasing exponent vector whose weighted sum stays below
    the cap and tallies the sum it lands on.
    """
    c = tuple(c)
    counts = [0] * (m_max + 1)
    tails = [sum(c[i:]) for i in range(len(c) + 1)]

    def rec(i: int, acc: int, min_s: int):
        if i == len(c):
            counts[acc] += 1
            return
        s, w = min_s, p**min_s
        while acc + tails[i] * w <= m_max:
            rec(i + 1, acc + c[i] * w, s + 1)
            s, w = s + 1, w * p

    rec(0, 0, 0)
    return counts
