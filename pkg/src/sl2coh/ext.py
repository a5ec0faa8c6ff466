"""Ext^n between SL2 Weyl modules via block rules and the degree recursions.

Write m1 = p*a + i and m2 = p*b + j with 0 <= i, j <= p-1 and m1 >= m2.
Weights with residue p-1 reduce to (b, a); otherwise the pair lies in a
common block only when ``i == j`` with a-b even, or ``j == p-2-i`` with
a-b odd.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .padic import bound_C, check_odd_prime, digits_of, fibonacci
from .report import RunReport
from .systems import _N, stable_length
from .weyl import dim_weyl_cohomology


class BlockRelation(Enum):
    EQUAL = "Equal"
    STEINBERG_REDUCE = "SteinbergReduce"
    EVEN_SAME_BLOCK = "EvenSameBlock"
    ODD_SAME_BLOCK = "OddSameBlock"
    DIFFERENT_BLOCK = "DifferentBlock"


def _check_pair(m2: int, m1: int, p: int) -> None:
    check_odd_prime(p, "Ext between Weyl modules")
    if m2 < 0:
        raise ValueError("weights must be non-negative")
    if m1 < m2:
        raise ValueError(f"requires m1 >= m2, got m1={m1}, m2={m2}")


def _classify(m1: int, m2: int, p: int) -> BlockRelation:
    if m1 == m2:
        return BlockRelation.EQUAL
    a, i = divmod(m1, p)
    b, j = divmod(m2, p)
    if i == p - 1 and j == p - 1:
        return BlockRelation.STEINBERG_REDUCE
    if i == p - 1 or j == p - 1:
        return BlockRelation.DIFFERENT_BLOCK
    if (a - b) % 2 == 0 and i == j:
        return BlockRelation.EVEN_SAME_BLOCK
    if (a - b) % 2 == 1 and j == p - 2 - i:
        return BlockRelation.ODD_SAME_BLOCK
    return BlockRelation.DIFFERENT_BLOCK


def classify_block(m1: int, m2: int, p: int) -> BlockRelation:
    _check_pair(m2, m1, p)
    return _classify(m1, m2, p)


def _even_sum(n: int, d: int, p: int) -> int:
    # sum_{t=0}^{(d-2)/2} dim H^{n-1-2t}(G, V(d-2-2t)) + [n == d].
    # Each summand is N(d/2 - t, n - 2t); the t = d/2 term N(0, n - d) is
    # the boundary term, zero below n = d.  Without it Ext^n(V(0), V(pd))
    # disagrees with H^n(G, V(pd)) at n = d.
    if n < 0:
        return 0
    top = min((d - 2) // 2, (n - 1) // 2)
    total = sum(dim_weyl_cohomology(n - 1 - 2 * t, d - 2 - 2 * t, p) for t in range(top + 1))
    return total + int(n == d)


def _odd_base_sum(n: int, a: int, p: int) -> int:
    # b = 0: sum_{t=0}^{(a-1)/2} dim H^{n-2t}(G, V(a-1-2t)) + [n == a],
    # boundary term as in _even_sum
    if n < 0:
        return 0
    top = min((a - 1) // 2, n // 2)
    total = sum(dim_weyl_cohomology(n - 2 * t, a - 1 - 2 * t, p) for t in range(top + 1))
    return total + int(n == a)


@lru_cache(maxsize=None)
def _ext(n: int, m2: int, m1: int, p: int) -> int:
    if n < 0:
        return 0
    kind = _classify(m1, m2, p)
    if kind is BlockRelation.EQUAL:
        return int(n == 0)
    if kind is BlockRelation.DIFFERENT_BLOCK:
        return 0
    a, i = divmod(m1, p)
    b, j = divmod(m2, p)
    if kind is BlockRelation.STEINBERG_REDUCE:
        return _ext(n, b, a, p)
    if kind is BlockRelation.EVEN_SAME_BLOCK:
        return _even_sum(n, a - b, p)
    if b == 0:
        return _odd_base_sum(n, a, p)
    return _ext(n, b, a - 1, p) + _ext(n - 1, p * b + j, p * (a - 1) + j, p)


def dim_ext(n: int, m2: int, m1: int, p: int) -> int:
    """dim Ext^n_G(V(m2), V(m1)) for m1 >= m2 and odd p."""
    _check_pair(m2, m1, p)
    return _ext(n, m2, m1, p)


def _sum_of_two_powers(x: int, p: int):
    """Return (u, v) with x == p^u + p^v, u != v both >= 1, else None."""
    c = digits_of(x, p)
    pos = [k for k, d in enumerate(c) if d]
    if len(pos) == 2 and all(c[k] == 1 for k in pos) and pos[0] >= 1:
        return tuple(pos)
    return None


def _is_power(x: int, p: int, min_exp: int = 1) -> bool:
    c = digits_of(x, p)
    return sum(c) == 1 and c[-1] == 1 and len(c) - 1 >= min_exp


def ext3_closed(m2: int, m1: int, p: int) -> int:
    """dim Ext^3_G(V(m2), V(m1)) by the degree-three case list.

    Even a-b: 1 when a-b = 4, else N((a-b)/2, 3).
    Odd a-b:  1 when a-b = 2p^u + 3 - 2e; 2 or 3 when a-b = 2p^u + 2p^v + 1
    (2 if u or v is 1); otherwise the value for (V(b), V(a-1)).
    """
    _check_pair(m2, m1, p)
    return _ext3(m2, m1, p)


def _ext3(m2: int, m1: int, p: int) -> int:
    kind = _classify(m1, m2, p)
    if kind in (BlockRelation.EQUAL, BlockRelation.DIFFERENT_BLOCK):
        return 0
    a = m1 // p
    b = m2 // p
    if kind is BlockRelation.STEINBERG_REDUCE:
        return _ext3(b, a, p)
    d = a - b
    if kind is BlockRelation.EVEN_SAME_BLOCK:
        return 1 if d == 4 else _N(d // 2, 3, p)
    for eps in (0, 1):
        x = d - 3 + 2 * eps
        if x > 0 and x % 2 == 0 and _is_power(x // 2, p):
            return 1
    if d > 1 and (d - 1) % 2 == 0:
        uv = _sum_of_two_powers((d - 1) // 2, p)
        if uv is not None:
            return 2 if min(uv) == 1 else 3
    return _ext3(b, a - 1, p)


def rank_reduction_dim(n: int, m_lambda: int, m_mu: int, p: int) -> int:
    """Ext^n(V(lambda), V(mu)) for mu - lambda a multiple of one simple root,
    given the pairings m_lambda = (lambda, alpha^vee), m_mu = (mu, alpha^vee)."""
    if m_lambda < 0 or m_mu < m_lambda:
        raise ValueError(f"requires m_mu >= m_lambda >= 0, got {m_lambda}, {m_mu}")
    return dim_ext(n, 2 * m_lambda, 2 * m_mu, p)


def specht_weights(lambda1: int, lambda2: int) -> tuple[int, int]:
    """SL2 weights (source, target) attached to the two-part partition (lambda1, lambda2)."""
    return 2 * (lambda1 - lambda2), 2 * (lambda1 + lambda2)


def specht_dim(n: int, lambda1: int, lambda2: int, p: int) -> int:
    """dim H^n(Sigma_d, S^lambda) for lambda = (lambda1, lambda2), 0 <= n <= 2p-4."""
    check_odd_prime(p, "the Specht-module translation")
    if not lambda1 >= lambda2 >= 0:
        raise ValueError("requires lambda1 >= lambda2 >= 0")
    if not 0 <= n <= 2 * p - 4:
        raise ValueError(f"Specht translation holds for 0 <= n <= 2p-4 = {2 * p - 4}, got n={n}")
    src, tgt = specht_weights(lambda1, lambda2)
    return dim_ext(n, src, tgt, p)


def same_block_partners(m2: int, m1_max: int, p: int):
    """All m1 in [m2, m1_max] whose block relation with m2 is not DifferentBlock."""
    for m1 in range(m2, m1_max + 1):
        if _classify(m1, m2, p) is not BlockRelation.DIFFERENT_BLOCK:
            yield m1


def fibonacci_ext_bound(n: int, r: int) -> int:
    # F(0) = 0, so degree 0 gets the bound 1
    return fibonacci(n + 1) + (r - 1) * (fibonacci(n) if n else 0)


def verify_ext_bounds(p: int, n_max: int, m1_max: int, m2_max: int,
                      exp_n_max: int = 0, exp_m1_step: int = 1) -> RunReport:
    """Sweep same-block pairs and compare against the Ext bounds.

    Fibonacci bound F(n+1) + (r-1)F(n) for n <= min(n_max, 2p-3), with r
    the least integer such that m2 < p^r.  Exponential bound
    C_{n+2} + (r-1) C_n for 1 <= n <= exp_n_max on m1 in steps of
    ``exp_m1_step``.  Also checks dim Ext^n <= n for n in {1, 2} and
    dim Ext^3 <= 3.
    """
    check_odd_prime(p)
    rep = RunReport("verify-ext-bounds", {"p": p, "n_max": n_max, "m1_max": m1_max,
                                          "m2_max": m2_max, "exp_n_max": exp_n_max})
    fib_n = min(n_max, 2 * p - 3)
    maxima: dict[int, int] = {}
    pairs = 0
    for m2 in range(m2_max + 1):
        r = stable_length(m2, p)
        for m1 in same_block_partners(m2, m1_max, p):
            pairs += 1
            sampled = (m1 - m2) % exp_m1_step == 0
            top = max(fib_n, exp_n_max if sampled else 0, 3)
            for n in range(top + 1):
                d = _ext(n, m2, m1, p)
                if d > maxima.get(n, -1):
                    maxima[n] = d
                if n <= fib_n and d > fibonacci_ext_bound(n, r):
                    rep.violation(bound="F(n+1)+(r-1)F(n)", p=p, n=n, m1=m1, m2=m2, dim=d)
                if n in (1, 2) and d > n:
                    rep.violation(bound="<=n", p=p, n=n, m1=m1, m2=m2, dim=d)
                if n == 3 and d > 3:
                    rep.violation(bound="<=3", p=p, n=n, m1=m1, m2=m2, dim=d)
                if sampled and 1 <= n <= exp_n_max:
                    bound = bound_C(n + 2) + bound_C(n).scaled(r - 1)
                    if not bound.admits(d):
                        rep.violation(bound="C(n+2)+(r-1)C(n)", p=p, n=n, m1=m1, m2=m2, dim=d)
    rep.rows = [{"p": p, "n": n, "max_dim": maxima[n]} for n in sorted(maxima)]
    rep.summary["pairs"] = pairs
    return rep
