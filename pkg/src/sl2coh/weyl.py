"""Dimensions of H^n(B, -m) and H^n(SL2, V(m)) from the solution counts.

For odd p, ``dim H^n(B, -m) = N(m/2, n)`` and
``dim H^n(G, V(m)) = dim H^{n+1}(B, -m-2) = N(m/2 + 1, n + 1)``.
For p = 2 the exterior part disappears and the count becomes the number
of partitions of m + 2 into n + 1 parts from {2, 4, 8, ...}.
"""

from __future__ import annotations

from typing import Iterable

from .padic import (
    bound_C,
    check_odd_prime,
    check_prime,
    digits_of,
    fibonacci,
    power_partition_bound,
)
from .partitions import count_pAn, pAn_table
from .report import RunReport
from .systems import _N, _power_vectors, n_table, stable_length


def dim_B_cohomology(n: int, m: int, p: int) -> int:
    check_odd_prime(p, "B-cohomology")
    if n < 0 or m < 0 or m % 2:
        return 0
    return _N(m // 2, n, p)


def dim_weyl_cohomology(n: int, m: int, p: int) -> int:
    check_prime(p)
    if n < 0 or m < 0 or m % 2:
        return 0
    if p == 2:
        return count_pAn(m + 2, n + 1, 2, min_exp=1)
    return _N(m // 2 + 1, n + 1, p)


def p2_system_count(target: int, parts: int) -> int:
    """Brute-force count of a_1..a_r >= 0 with sum(a) = parts, sum(2^i a_i) = target."""
    if target < 0 or parts < 0:
        return 0
    r = max(1, stable_length(target, 2))
    return sum(1 for _ in _power_vectors(target, parts, r, 2))


# Families of m for n = 1, 2, 3, keyed by the base-p digit signature of
# M = m/2 + 1: (c_0, sorted nonzero digits in positions >= 1).
# Distinct positive exponents u, v, w, x become distinct digit positions.
_LOW_DEGREE_FAMILIES: dict[int, dict[tuple[int, tuple[int, ...]], int]] = {
    1: {
        (1, (1,)): 1,          # 2p^u
        (0, (1,)): 1,          # 2p^u - 2
        (0, (1, 1)): 1,        # 2p^u + 2p^v - 2
    },
    2: {
        (0, (1, 1)): 2,        # 2p^u + 2p^v - 2
        (1, (1,)): 1,          # 2p^u
        (0, (2,)): 1,          # 4p^u - 2
        (1, (1, 1)): 1,        # 2p^u + 2p^v
        (0, (1, 1, 1)): 1,     # 2p^u + 2p^v + 2p^w - 2
    },
    3: {
        (0, (1, 1, 1)): 3,     # 2p^u + 2p^v + 2p^w - 2
        (1, (1, 1)): 2,        # 2p^u + 2p^v
        (1, (2,)): 1,          # 4p^u
        (0, (2,)): 1,          # 4p^u - 2
        (0, (1, 1)): 1,        # 2p^u + 2p^v - 2
        (0, (1, 2)): 1,        # 4p^u + 2p^v - 2
        (1, (1, 1, 1)): 1,     # 2p^u + 2p^v + 2p^w
        (0, (1, 1, 1, 1)): 1,  # 2p^u + 2p^v + 2p^w + 2p^x - 2
    },
}


def low_degree_classifier(n: int, m: int, p: int) -> int:
    """dim H^n(G, V(m)) for n in {1, 2, 3} by matching m against the known families."""
    check_odd_prime(p, "the low-degree classifier")
    if n not in _LOW_DEGREE_FAMILIES:
        raise ValueError(f"classifier covers n in {{1, 2, 3}}, got n={n}")
    if m < 0 or m % 2:
        return 0
    c = digits_of(m // 2 + 1, p)
    key = (c[0], tuple(sorted(x for x in c[1:] if x)))
    return _LOW_DEGREE_FAMILIES[n].get(key, 0)


def weyl_table(m_values: Iterable[int], n_values: Iterable[int], p: int) -> list[dict]:
    ms, ns = sorted(set(m_values)), sorted(set(n_values))
    return [{"p": p, "n": n, "m": m, "dim": dim_weyl_cohomology(n, m, p)}
            for n in ns for m in ms]


def verify_weyl_bounds(m_max: int, n_max: int, p: int) -> RunReport:
    """Check every even m <= m_max and 0 <= n <= n_max against the known bounds.

    Odd p: F(n+1) for n <= 2p-3, C_{n+1} for n >= 1.
    p = 2: exp(2 pi (n+1)/sqrt 3) 2^(n+1) for n >= 1.
    """
    check_prime(p)
    rep = RunReport("verify-weyl-bounds", {"p": p, "m_max": m_max, "n_max": n_max})
    if p == 2:
        T = pAn_table(m_max // 2 + 1, n_max + 1, 2)

        def dim(n, m):
            return int(T[n + 1, m // 2 + 1])
    else:
        T = n_table(m_max // 2 + 1, n_max + 1, p)

        def dim(n, m):
            return T[n + 1][m // 2 + 1]

    checked = 0
    for n in range(n_max + 1):
        best, arg = -1, None
        cexp = bound_C(n + 1) if n >= 1 else None
        p2b = power_partition_bound(n + 1) if (p == 2 and n >= 1) else None
        for m in range(0, m_max + 1, 2):
            d = dim(n, m)
            checked += 1
            if d > best:
                best, arg = d, m
            if p != 2 and n <= 2 * p - 3 and d > fibonacci(n + 1):
                rep.violation(bound="F(n+1)", p=p, n=n, m=m, dim=d)
            if cexp is not None and p != 2 and not cexp.admits(d):
                rep.violation(bound="C(n+1)", p=p, n=n, m=m, dim=d)
            if p2b is not None and not p2b.admits(d):
                rep.violation(bound="p2", p=p, n=n, m=m, dim=d)
        rep.rows.append({"p": p, "n": n, "max_dim": best, "argmax_m": arg})
    rep.summary["checked"] = checked
    return rep
