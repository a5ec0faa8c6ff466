"""Verification suites behind ``sl2coh verify``.

Each suite takes a scale ("quick" or "full") and returns a RunReport whose
violations list is empty when every check passes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from .carlson import (
    all_labels,
    generic_stabilization_probe,
    verify_finite_bound,
)
from .ext import _ext, ext3_closed, fibonacci_ext_bound, same_block_partners, specht_dim, verify_ext_bounds
from .padic import bound_C, fibonacci, hardy_ramanujan_bound, height, power_partition_bound
from .partitions import (
    B_Ac_table,
    compositions_count,
    compositions_iter,
    pAn_table,
    partition_count,
    partition_count_pentagonal,
)
from .report import RunReport
from .systems import (
    _N,
    _N_sum,
    closed_form_N,
    count_N_bruteforce,
    count_N_weighted,
    max_form_weight,
    n_table,
    stable_length,
)
from .weyl import (
    dim_B_cohomology,
    dim_weyl_cohomology,
    low_degree_classifier,
    p2_system_count,
    verify_weyl_bounds,
)

SCALES = ("quick", "full")


def _shard(fn, args, threads: int = 1) -> list[RunReport]:
    # results come back in argument order whatever the completion order
    if threads > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=threads) as ex:
            return list(ex.map(fn, *zip(*args)))
    return [fn(*a) for a in args]


def _combine(name: str, scale: str, parts: list[RunReport]) -> RunReport:
    rep = RunReport(f"verify-{name}", {"suite": name, "scale": scale})
    for part in parts:
        rep.rows.extend(part.rows)
        rep.violations.extend(part.violations)
        for k, v in part.summary.items():
            rep.summary[k] = rep.summary.get(k, 0) + v if isinstance(v, int) and not isinstance(v, bool) else v
    rep.summary["violations"] = len(rep.violations)
    return rep


# -- linear systems ---------------------------------------------------------

def oracle_shard(p: int, m_max: int, n_max: int) -> RunReport:
    rep = RunReport("oracle", {"p": p})
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            x, y, z = _N(m, n, p), _N_sum(m, n, p), count_N_bruteforce(m, n, p)
            if not x == y == z:
                rep.violation(check="three-way", p=p, m=m, n=n, recursive=x, sum=y, brute=z)
    rep.summary["checked"] = (m_max + 1) * (n_max + 1)
    return rep


def suite_oracle(scale: str, threads: int = 1) -> RunReport:
    ps, m_max, n_max = ((3, 5), 500, 8) if scale == "quick" else ((3, 5, 7), 2000, 10)
    return _combine("oracle", scale, _shard(oracle_shard, [(p, m_max, n_max) for p in ps], threads))


def closed_form_shard(p: int, m_max: int) -> RunReport:
    rep = RunReport("closed-form", {"p": p})
    checked = 0
    for m in range(m_max + 1):
        for n in range(1, 2 * p - 1):
            checked += 1
            c, b = closed_form_N(m, n, p), count_N_bruteforce(m, n, p)
            if c != b:
                rep.violation(check="closed-form", p=p, m=m, n=n, closed=c, brute=b)
    rep.summary["checked"] = checked
    return rep


def suite_closed_form(scale: str, threads: int = 1) -> RunReport:
    m_max = 1000 if scale == "quick" else 5000
    return _combine("closed-form", scale, _shard(closed_form_shard, [(p, m_max) for p in (3, 5)], threads))


def properties_shard(p: int, m_max: int, n_max: int) -> RunReport:
    """Parity vanishing, shift identity, diagonal values, stabilization in r,
    the max-form weight, the weighted bound and the B/G shift."""
    rep = RunReport("properties", {"p": p})
    checked = 0
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            checked += 1
            v = _N(m, n, p)
            if m % p not in (0, 1) and v:
                rep.violation(check="parity", p=p, m=m, n=n, value=v)
            if m % p == 0:
                if v != _N(m + 1, n + 1, p):
                    rep.violation(check="shift", p=p, m=m, n=n)
                if 2 * m % p == 0 and n >= 2 * m // p:
                    want = int(n == 2 * m // p)
                    if v != want:
                        rep.violation(check="diagonal", p=p, m=m, n=n, value=v, expected=want)
    # stabilization in r on a small grid
    for m in range(0, min(m_max, 200) + 1):
        r = stable_length(m, p)
        for n in range(min(n_max, 6) + 1):
            if count_N_bruteforce(m, n, p, r) != count_N_bruteforce(m, n, p, r + 1):
                rep.violation(check="stabilization", p=p, m=m, n=n)
    # appending (a, b) -> ((a, 0), (b, 1)) lands in length r+1 at m + p^r
    for m in range(0, min(m_max, 500) + 1):
        r = stable_length(m, p)
        for n in range(min(n_max, 8) + 1):
            if count_N_bruteforce(m, n, p, r) > count_N_bruteforce(m + p**r, n + 1, p, r + 1):
                rep.violation(check="monotone map", p=p, m=m, n=n)
            if _N(m, n, p) > _N(m + p ** (r + 1), n + 1, p):
                rep.violation(check="monotone", p=p, m=m, n=n)
    # the max-form weight p + ... + p^h wins among weights of height h
    limit = 3000 if m_max > 500 else 800
    for h in range(1, 5):
        top = max_form_weight(h, p)
        if top > limit:
            break
        for n in range(1, 2 * p - 1):
            best = _N(top, n, p)
            for m in range(1, limit + 1):
                if height(m, p) == h and _N(m, n, p) > best:
                    rep.violation(check="max-form", p=p, h=h, n=n, m=m)
    # weighted system against C_n
    rng = random.Random(p)
    for _ in range(60):
        m = rng.randrange(1, 400)
        n = rng.randrange(1, 7)
        w = tuple(rng.randrange(1, 4) for _ in range(stable_length(m, p)))
        c = count_N_weighted(m, n, p, w)
        if not bound_C(n).admits(c):
            rep.violation(check="weighted-bound", p=p, m=m, n=n, weights=str(w), value=c)
    # dim H^n(G, V(m)) = dim H^(n+1)(B, -m-2)
    for m in range(0, min(2 * m_max, 5000) + 1, 2):
        for n in range(min(n_max, 8) + 1):
            if dim_weyl_cohomology(n, m, p) != dim_B_cohomology(n + 1, m + 2, p):
                rep.violation(check="G-B shift", p=p, m=m, n=n)
    rep.summary["checked"] = checked
    return rep


def suite_properties(scale: str, threads: int = 1) -> RunReport:
    ps, m_max, n_max = ((3, 5), 500, 8) if scale == "quick" else ((3, 5, 7), 2000, 10)
    return _combine("properties", scale, _shard(properties_shard, [(p, m_max, n_max) for p in ps], threads))


def fibonacci_shard(p: int, m_max: int) -> RunReport:
    rep = RunReport("fibonacci", {"p": p})
    T = n_table(m_max, 2 * p - 2, p)
    for n in range(1, 2 * p - 1):
        row, f = T[n], fibonacci(n)
        best = max(row)
        if best > f:
            m = row.index(best)
            rep.violation(check="N<=F(n)", p=p, n=n, m=m, value=best)
        rep.rows.append({"p": p, "n": n, "max_dim": best, "bound": f})
    weyl = verify_weyl_bounds(min(m_max, 20000), 2 * p - 3, p)
    rep.violations.extend(weyl.violations)
    rep.summary["checked"] = m_max * (2 * p - 2) + weyl.summary["checked"]
    return rep


def suite_fibonacci(scale: str, threads: int = 1) -> RunReport:
    args = [(3, 10**4)] if scale == "quick" else [(p, 10**5) for p in (3, 5, 7)]
    return _combine("fibonacci", scale, _shard(fibonacci_shard, args, threads))


# -- Weyl modules ------------------------------------------------------------

SPOT_VALUES = ((1, 4, 3, 1), (2, 22, 3, 2), (3, 76, 3, 3))


def low_degree_shard(p: int, m_max: int) -> RunReport:
    rep = RunReport("low-degree", {"p": p})
    checked = 0
    for n in (1, 2, 3):
        for m in range(0, m_max + 1, 2):
            checked += 1
            a, b = low_degree_classifier(n, m, p), dim_weyl_cohomology(n, m, p)
            if a != b:
                rep.violation(check="classifier", p=p, n=n, m=m, classifier=a, general=b)
    rep.summary["checked"] = checked
    return rep


def suite_low_degree(scale: str, threads: int = 1) -> RunReport:
    m_max = 2000 if scale == "quick" else 10**4
    rep = _combine("low-degree", scale, _shard(low_degree_shard, [(p, m_max) for p in (3, 5)], threads))
    for n, m, p, want in SPOT_VALUES:
        got = dim_weyl_cohomology(n, m, p)
        rep.rows.append({"p": p, "n": n, "m": m, "dim": got})
        if got != want:
            rep.violation(check="spot", p=p, n=n, m=m, dim=got, expected=want)
    got = dim_weyl_cohomology(7, 724, 3)
    rep.rows.append({"p": 3, "n": 7, "m": 724, "dim": got})
    if got < 6:
        rep.violation(check="lower-bound instance", p=3, n=7, m=724, dim=got)
    rep.summary["violations"] = len(rep.violations)
    return rep


def p2_shard(m_lo: int, m_hi: int, n_max: int) -> RunReport:
    rep = RunReport("p2", {})
    for m in range(m_lo, m_hi + 1, 2):
        for n in range(n_max + 1):
            a, b = dim_weyl_cohomology(n, m, 2), p2_system_count(m + 2, n + 1)
            if a != b:
                rep.violation(check="p2-oracle", p=2, m=m, n=n, value=a, brute=b)
    rep.summary["checked"] = ((m_hi - m_lo) // 2 + 1) * (n_max + 1)
    return rep


def suite_p2(scale: str, threads: int = 1) -> RunReport:
    m_max, n_max = (1024, 8) if scale == "quick" else (4096, 12)
    step = 512
    args = [(lo, min(lo + step - 2, m_max), n_max) for lo in range(0, m_max + 1, step)]
    rep = _combine("p2", scale, _shard(p2_shard, args, threads))
    bounds = verify_weyl_bounds(m_max, n_max, 2)
    rep.violations.extend(bounds.violations)
    rep.rows.extend(bounds.rows)
    rep.summary["violations"] = len(rep.violations)
    return rep


# -- Ext between Weyl modules ------------------------------------------------

def ext3_shard(p: int, m1_max: int) -> RunReport:
    rep = RunReport("ext3", {"p": p})
    pairs = 0
    for m2 in range(m1_max + 1):
        for m1 in same_block_partners(m2, m1_max, p):
            pairs += 1
            a, b = ext3_closed(m2, m1, p), _ext(3, m2, m1, p)
            if a != b:
                rep.violation(check="ext3-closed", p=p, m2=m2, m1=m1, closed=a, recursive=b)
            if b > 3:
                rep.violation(check="ext3<=3", p=p, m2=m2, m1=m1, dim=b)
            for n in (1, 2):
                d = _ext(n, m2, m1, p)
                if d > n:
                    rep.violation(check=f"ext{n}<={n}", p=p, m2=m2, m1=m1, dim=d)
    rep.summary["pairs"] = pairs
    return rep


def suite_ext3(scale: str, threads: int = 1) -> RunReport:
    args = [(3, 1000)] if scale == "quick" else [(3, 3000), (5, 3000)]
    return _combine("ext3", scale, _shard(ext3_shard, args, threads))


def specht_shard(p: int, lam_max: int) -> RunReport:
    rep = RunReport("specht", {"p": p})
    checked = 0
    for l1 in range(lam_max + 1):
        for l2 in range(l1 + 1):
            r = stable_length(2 * (l1 - l2), p)
            for n in range(2 * p - 3):
                checked += 1
                d = specht_dim(n, l1, l2, p)
                if 1 <= n <= 3 and d > n:
                    rep.violation(check="specht<=n", p=p, n=n, lambda1=l1, lambda2=l2, dim=d)
                if d > fibonacci_ext_bound(n, r):
                    rep.violation(check="specht-fib", p=p, n=n, lambda1=l1, lambda2=l2, dim=d)
    rep.summary["checked"] = checked
    return rep


def ext_bounds_shard(p: int, m1_max: int, exp_n_max: int, step: int) -> RunReport:
    return verify_ext_bounds(p, 2 * p - 3, m1_max, p**3 - 1, exp_n_max=exp_n_max, exp_m1_step=step)


def suite_ext_bounds(scale: str, threads: int = 1) -> RunReport:
    if scale == "quick":
        ext_args, lam = [(3, 1500, 4, 50)], 60
    else:
        ext_args, lam = [(3, 10**4, 8, 97), (5, 10**4, 8, 97)], 200
    parts = _shard(ext_bounds_shard, ext_args, threads)
    parts += _shard(specht_shard, [(p, lam) for p in (5, 7)], threads)
    return _combine("ext-bounds", scale, parts)


# -- partitions --------------------------------------------------------------

def partition_shard(p: int, m_max: int, n_max: int) -> RunReport:
    rep = RunReport("partitions", {"p": p})
    T = pAn_table(m_max, n_max, p)
    for n in range(1, n_max + 1):
        total = [0] * (m_max + 1)
        for c in compositions_iter(n):
            row = B_Ac_table(c, p, m_max)
            big = max(row)
            if big > 2**n:
                rep.violation(check="B<=2^n", p=p, n=n, c=str(c), value=big)
            for m, v in enumerate(row):
                total[m] += v
        # B_{A,c}(0) is empty by convention; p_{A,n}(0) = 0 for n >= 1 anyway
        bad = [m for m in range(1, m_max + 1) if total[m] != int(T[n, m])]
        for m in bad[:20]:
            rep.violation(check="composition-identity", p=p, n=n, m=m, sum=total[m], pAn=int(T[n, m]))
        top = int(T[n].max())
        if not power_partition_bound(n).admits(top, strict=True):
            rep.violation(check="pAn-bound", p=p, n=n, value=top)
        rep.rows.append({"p": p, "n": n, "max_dim": top})
    rep.summary["checked"] = n_max * m_max
    return rep


def suite_partition_bounds(scale: str, threads: int = 1) -> RunReport:
    m_max = 2000 if scale == "quick" else 10**4
    rep = _combine("partition-bounds", scale,
                   _shard(partition_shard, [(p, m_max, 8) for p in (2, 3)], threads)
                   + [partition_bounds_extras()])
    rep.summary["violations"] = len(rep.violations)
    return rep


def partition_bounds_extras() -> RunReport:
    """p(n) two ways and against exp(pi sqrt(2n/3)); compositions against p(2n^2)."""
    rep = RunReport("partition-extras", {})
    for n in range(1, 201):
        v = partition_count(n)
        if v != partition_count_pentagonal(n):
            rep.violation(check="p(n) two ways", n=n)
        if not hardy_ramanujan_bound(n).admits(v, strict=True):
            rep.violation(check="hardy-ramanujan", n=n, value=v)
    for n in range(1, 13):
        if compositions_count(n) > partition_count(2 * n * n):
            rep.violation(check="p_o<=p(2n^2)", n=n)
    return rep


# -- finite groups -----------------------------------------------------------

def _sampled_pairs(p: int, s: int, count: int, seed: int):
    labels = list(all_labels(p, s))
    rng = random.Random(seed)
    return [(rng.choice(labels), rng.choice(labels)) for _ in range(count)]


def finite_shard(p: int, s: int, n_max: int, sample: int) -> RunReport:
    pairs = _sampled_pairs(p, s, sample, 1000 * p + s) if sample else None
    return verify_finite_bound(p, [s], n_max, pairs=pairs)


def suite_finite_bounds(scale: str, threads: int = 1) -> RunReport:
    if scale == "quick":
        args = [(3, 1, 6, 0), (3, 2, 6, 0), (5, 2, 4, 200)]
    else:
        args = [(3, 1, 6, 0), (3, 2, 6, 0), (3, 3, 6, 0),
                (5, 1, 6, 0), (5, 2, 6, 0), (5, 3, 6, 1500)]
    return _combine("finite-bounds", scale, _shard(finite_shard, args, threads))


def stabilization_table(p: int = 3, m_max: int = 8, n_max: int = 4, s_min: int = 2, s_max: int = 5):
    rows = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            r = generic_stabilization_probe(n, m, p, s_min, s_max)
            for row in r.rows:
                rows.append(dict(row, tail_constant=int(r.summary["tail_constant"])))
    return rows


def suite_stabilization(scale: str, threads: int = 1) -> RunReport:
    rep = RunReport("verify-stabilization", {"suite": "stabilization", "scale": scale})
    s_max = 4 if scale == "quick" else 5
    first = stabilization_table(s_max=s_max)
    second = stabilization_table(s_max=s_max)
    if first != second:
        rep.violation(check="determinism")
    rep.rows = first
    flags = {(r["m"], r["n"]): r["tail_constant"] for r in first}
    rep.summary.update(tables=len(flags), tail_constant=sum(flags.values()), violations=len(rep.violations))
    return rep


SUITES = {
    "oracle": suite_oracle,
    "closed-form": suite_closed_form,
    "properties": suite_properties,
    "fibonacci": suite_fibonacci,
    "low-degree": suite_low_degree,
    "ext3": suite_ext3,
    "ext-bounds": suite_ext_bounds,
    "partition-bounds": suite_partition_bounds,
    "p2": suite_p2,
    "finite-bounds": suite_finite_bounds,
    "stabilization": suite_stabilization,
}


def run_suite(name: str, scale: str = "quick", threads: int = 1) -> RunReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {SCALES}")
    return SUITES[name](scale, threads)
