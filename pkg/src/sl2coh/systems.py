"""Solution counts N(m, n) of the two-equation system over base-p digits.

A solution is a pair of length-r vectors ``(a, b)`` with ``a_i >= 0`` and
``b_i`` in ``{0, d_i}`` (``d_i = 1`` for the plain system) such that::

    2 * sum(a) + sum(b) == n
    b_1 + sum_{i=1}^{r-1} (a_i + b_{i+1}) p^i + a_r p^r == m

Four independent routes are provided: bounded enumeration, the two-term
recursion, the sum recursion and (for small n) the binomial closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .padic import binomial, check_odd_prime, check_prime, digits_of


def stable_length(m: int, p: int) -> int:
    """Smallest r >= 1 with p^r > m."""
    r = 1
    while p**r <= m:
        r += 1
    return r


@dataclass(frozen=True)
class SystemQuery:
    m: int
    n: int
    p: int
    r: int | None = None
    weights: tuple[int, ...] | None = None

    def __post_init__(self):
        check_prime(self.p)
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        if self.r is None:
            r = stable_length(self.m, self.p) if self.weights is None else len(self.weights)
            object.__setattr__(self, "r", r)
        if self.r < 1:
            raise ValueError("vector length r must be >= 1")
        if self.weights is None:
            object.__setattr__(self, "weights", (1,) * self.r)
        else:
            object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) != self.r:
            raise ValueError(f"expected {self.r} weights, got {len(self.weights)}")
        if any(d < 1 for d in self.weights):
            raise ValueError("weights must be positive")


@dataclass(frozen=True, order=True)
class SolutionPair:
    # field order gives the (b, a) lexicographic sort
    b: tuple[int, ...]
    a: tuple[int, ...]

    def satisfies(self, q: SystemQuery) -> bool:
        a, b, p = self.a, self.b, q.p
        if len(a) != q.r or len(b) != q.r:
            return False
        if any(x < 0 for x in a) or any(bj not in (0, dj) for bj, dj in zip(b, q.weights)):
            return False
        lhs2 = b[0] + sum((a[i - 1] + b[i]) * p**i for i in range(1, q.r)) + a[-1] * p**q.r
        return 2 * sum(a) + sum(b) == q.n and lhs2 == q.m


def _power_vectors(target: int, parts: int, r: int, p: int) -> Iterator[tuple[int, ...]]:
    """All (a_1..a_r) >= 0 with sum(a) == parts and sum(a_i p^i) == target."""
    powers = [p**i for i in range(1, r + 1)]
    a = [0] * r

    def rec(idx: int, target: int, parts: int):
        # fill from the highest exponent down
        if idx < 0:
            if target == 0 and parts == 0:
                yield tuple(a)
            return
        w = powers[idx]
        if target > parts * w or target < parts * p:
            return
        for c in range(min(parts, target // w), -1, -1):
            a[idx] = c
            yield from rec(idx - 1, target - c * w, parts - c)
        a[idx] = 0

    if parts == 0:
        if target == 0:
            yield (0,) * r
        return
    yield from rec(r - 1, target, parts)


def iter_solutions(q: SystemQuery) -> Iterator[SolutionPair]:
    p, r, m, n = q.p, q.r, q.m, q.n
    for b in product(*[(0, d) for d in q.weights]):
        sb = sum(b)
        if sb > n or (n - sb) % 2:
            continue
        rest = m - b[0] - sum(b[i] * p**i for i in range(1, r))
        if rest < 0:
            continue
        for a in _power_vectors(rest, (n - sb) // 2, r, p):
            yield SolutionPair(tuple(b), a)


def enumerate_solutions(q: SystemQuery) -> list[SolutionPair]:
    return sorted(iter_solutions(q))


def count_N_bruteforce(m: int, n: int, p: int, r: int | None = None) -> int:
    if m < 0 or n < 0:
        return 0
    return sum(1 for _ in iter_solutions(SystemQuery(m, n, p, r)))


def count_N_weighted(m: int, n: int, p: int, weights: Sequence[int]) -> int:
    """Brute-force count for the weighted system (b_i in {0, d_i}).

    Only the first ``stable_length(m, p)`` weights matter; longer
    sequences are truncated since the extra coordinates are forced to 0.
    """
    r = stable_length(m, p)
    if len(weights) < r:
        raise ValueError(f"need at least {r} weights for m={m}, p={p}")
    return sum(1 for _ in iter_solutions(SystemQuery(m, n, p, r, tuple(weights[:r]))))


@lru_cache(maxsize=None)
def _N(m: int, n: int, p: int) -> int:
    if m < 0 or n < 0:
        return 0
    if m <= 1:
        return int(n == m)
    q, e = divmod(m, p)
    if e == 0:
        return _N(m - p, n - 2, p) + _N(q, n, p)
    if e == 1:
        return _N(m - p, n - 2, p) + _N(q, n - 1, p)
    return 0


def count_N(m: int, n: int, p: int) -> int:
    """N(m, n) by the two-term recursion, memoized on (m, n, p)."""
    check_odd_prime(p, "the N(m, n) recursion")
    return _N(m, n, p)


@lru_cache(maxsize=None)
def _N_sum(m: int, n: int, p: int) -> int:
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return int(n == 0)
    q, e = divmod(m, p)
    if e > 1:
        return 0
    return sum(_N_sum(q - a, n - e - 2 * a, p) for a in range(n // 2 + 1))


def count_N_sum_form(m: int, n: int, p: int) -> int:
    """N(m, n) by summing over the first coordinate a_1."""
    check_odd_prime(p, "the N(m, n) sum recursion")
    return _N_sum(m, n, p)


def closed_form_N(m: int, n: int, p: int) -> int:
    """Binomial formula C(r_m - s_m, 2 ht(m) - c_0 - n), exact for n <= 2p - 2.

    Weights with c_0 >= 2 have no solutions at all (b_1 is 0 or 1); the
    binomial alone would miss that, so they return 0 explicitly.
    """
    check_odd_prime(p, "the closed form")
    if n > 2 * p - 2:
        raise ValueError(f"closed form requires n <= 2p-2 = {2 * p - 2}, got n={n}")
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return int(n == 0)
    if n < 1:
        raise ValueError("closed form requires n >= 1 when m >= 1")
    c = digits_of(m, p)
    if c[0] > 1:
        return 0
    nonzero_above = sum(1 for x in c[1:] if x)
    return binomial(nonzero_above, 2 * sum(c) - c[0] - n)


def max_form_weight(h: int, p: int) -> int:
    """p + p^2 + ... + p^h, the height-h weight maximizing N(., n) for n <= 2p-2."""
    if h < 1:
        raise ValueError("h must be >= 1")
    return sum(p**j for j in range(1, h + 1))


def n_table(m_max: int, n_max: int, p: int) -> list[list[int]]:
    """Bottom-up table ``T[n][m] = N(m, n)`` for 0 <= m <= m_max, 0 <= n <= n_max.

    Same recursion as :func:`count_N`, evaluated iteratively; for sweeps
    where the memoized version would hold millions of cache entries.
    """
    check_odd_prime(p, "the N(m, n) recursion")
    T = [[0] * (m_max + 1) for _ in range(n_max + 1)]
    if m_max >= 0:
        T[0][0] = 1
    if m_max >= 1 and n_max >= 1:
        T[1][1] = 1
    for n in range(n_max + 1):
        row, row1 = T[n], T[n - 1] if n >= 1 else None
        row2 = T[n - 2] if n >= 2 else None
        for m in range(2, m_max + 1):
            q, e = divmod(m, p)
            if e > 1:
                continue
            v = row2[m - p] if row2 is not None and m >= p else 0
            if e == 0:
                v += row[q]
            elif row1 is not None:
                v += row1[q]
            row[m] = v
    return T
