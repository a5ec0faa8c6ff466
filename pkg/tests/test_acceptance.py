"""Exit criteria, each at its stated range and tolerance.

All comparisons are exact integer comparisons.  Irrational bounds are
enclosed with interval arithmetic and a count is accepted only when it
sits at or below the lower end of the enclosure.  Every test records one
PASS/FAIL line that is printed at the end of the run.
"""

import time

from conftest import ACCEPTANCE
from sl2coh.carlson import dim_H_finite, SimpleLabel
from sl2coh.ext import _ext, ext3_closed, same_block_partners
from sl2coh.padic import bound_C
from sl2coh.verify import (
    closed_form_shard,
    ext_bounds_shard,
    fibonacci_shard,
    finite_shard,
    low_degree_shard,
    oracle_shard,
    p2_shard,
    partition_bounds_extras,
    partition_shard,
    properties_shard,
    specht_shard,
    stabilization_table,
)
from sl2coh.weyl import dim_B_cohomology, dim_weyl_cohomology, verify_weyl_bounds


def record(k, violations, detail=""):
    ok = not violations
    ACCEPTANCE[k] = (ok, detail if ok else f"{len(violations)} violation(s), first {violations[0]}; {detail}")
    assert ok, ACCEPTANCE[k][1]


def test_criterion_01_three_way_agreement():
    bad = []
    for p in (3, 5, 7):
        bad += oracle_shard(p, 2000, 10).violations
    record(1, bad, "m <= 2000, n <= 10, p in {3,5,7}")


def test_criterion_02_closed_form():
    bad = []
    for p in (3, 5):
        bad += closed_form_shard(p, 5000).violations
    record(2, bad, "m <= 5000, 1 <= n <= 2p-2, p in {3,5}")


def test_criterion_03_parity_shift_diagonal():
    bad = []
    for p in (3, 5, 7):
        bad += [v for v in properties_shard(p, 2000, 10).violations
                if v["check"] in ("parity", "shift", "diagonal")]
    record(3, bad, "grid of criterion 1")


def test_criterion_04_fibonacci_bound():
    bad = []
    for p in (3, 5, 7):
        rep = fibonacci_shard(p, 10**5)
        bad += [v for v in rep.violations if v["check"] == "N<=F(n)"]
    record(4, bad, "m <= 10^5, 1 <= n <= 2p-2, p in {3,5,7}")


def test_criterion_05_low_degree():
    bad = []
    for p in (3, 5):
        bad += low_degree_shard(p, 10**4).violations
    for n, m, want in ((1, 4, 1), (2, 22, 2), (3, 76, 3)):
        got = dim_weyl_cohomology(n, m, 3)
        if got != want:
            bad.append({"n": n, "m": m, "dim": got, "expected": want})
    record(5, bad, "classifier = formula, even m <= 10^4, p in {3,5}; spot values at p=3")


def test_criterion_06_G_to_B_shift():
    bad = [(p, n, m) for p in (3, 5) for m in range(0, 5001, 2) for n in range(9)
           if dim_weyl_cohomology(n, m, p) != dim_B_cohomology(n + 1, m + 2, p)]
    record(6, bad, "even m <= 5000, n <= 8, p in {3,5}")


def test_criterion_07_lower_bound_instance():
    got = dim_weyl_cohomology(7, 724, 3)
    record(7, [] if got >= 6 else [{"dim": got}], f"dim H^7(G, V(724)) = {got} >= 6")


def test_criterion_08_p2_route():
    bad = []
    for lo in range(0, 4097, 512):
        bad += p2_shard(lo, min(lo + 510, 4096), 12).violations
    bad += verify_weyl_bounds(4096, 12, 2).violations
    record(8, bad, "m <= 4096, n <= 12; bound exp(2 pi (n+1)/sqrt 3) 2^(n+1)")


# the degree-three sweep feeds criteria 9 and 10
_EXT_SWEEP: dict = {}


def _ext_sweep():
    if not _EXT_SWEEP:
        mismatch, over3, low = [], [], []
        pairs = 0
        for p in (3, 5):
            for m2 in range(3001):
                for m1 in same_block_partners(m2, 3000, p):
                    pairs += 1
                    want = _ext(3, m2, m1, p)
                    got = ext3_closed(m2, m1, p)
                    if got != want:
                        mismatch.append({"p": p, "m2": m2, "m1": m1, "closed": got, "recursion": want})
                    if want > 3 or got > 3:
                        over3.append({"p": p, "m2": m2, "m1": m1, "dim": max(got, want)})
                    for n in (1, 2):
                        d = _ext(n, m2, m1, p)
                        if d > n:
                            low.append({"p": p, "n": n, "m2": m2, "m1": m1, "dim": d})
        _EXT_SWEEP.update(pairs=pairs, mismatch=mismatch, over3=over3, low=low)
    return _EXT_SWEEP


def test_criterion_09_ext3_closed_form():
    # Known red: the case list and the recursion disagree on about 2.4% of
    # pairs; see the decisions ledger for the two sources of disagreement.
    s = _ext_sweep()
    record(9, s["mismatch"] + s["over3"],
           f"{s['pairs']} same-block pairs, m1 <= 3000, p in {{3,5}}; "
           f"{len(s['mismatch'])} mismatches, {len(s['over3'])} values above 3")


def test_criterion_10_ext_degree_one_two():
    s = _ext_sweep()
    record(10, s["low"], f"dim Ext^n <= n for n in {{1,2}} on {s['pairs']} pairs")


def test_criterion_11_ext_bounds():
    bad = []
    for p in (3, 5):
        bad += ext_bounds_shard(p, 10**4, 8, 97).violations
    record(11, bad, "m2 < p^3, m1 <= 10^4, p in {3,5}; exponential bound n <= 8 on m1 = m2 mod 97")


def test_criterion_12_partitions():
    bad = []
    for p in (2, 3):
        bad += partition_shard(p, 10**4, 8).violations
    bad += partition_bounds_extras().violations
    record(12, bad, "identity m <= 10^4, n <= 8; p(n) for n <= 200; compositions n <= 12")


def test_criterion_13_finite_groups():
    bad = []
    t0 = time.time()
    for p in (3, 5):
        for s in (1, 2):
            bad += finite_shard(p, s, 6, 0).violations
        bad += finite_shard(p, 3, 6, 0 if p == 3 else 1500).violations
    # d = 0 specialization against (2n + 7) C_n on every s <= 3 label
    for p in (3, 5):
        for s in (1, 2, 3):
            for m in range(p**s):
                f = SimpleLabel.of_weight(m, p, s)
                for n in range(1, 7):
                    if not bound_C(n).scaled(2 * n + 7).admits(dim_H_finite(n, f)):
                        bad.append({"p": p, "s": s, "n": n, "f": f.weights})
    record(13, bad, f"p in {{3,5}}, s <= 3, n <= 6 ({time.time() - t0:.0f} s)")


def test_criterion_14_stabilization_probe():
    first = stabilization_table(3, 8, 4, 2, 5)
    second = stabilization_table(3, 8, 4, 2, 5)
    bad = [] if first == second and len(first) == 9 * 5 * 4 else [{"rows": len(first)}]
    flags = sum(r["tail_constant"] for r in first) // 4
    record(14, bad, f"deterministic 45 tables over s in [2,5]; {flags} tail-constant")


def test_criterion_15_specht():
    bad = []
    for p in (5, 7):
        bad += specht_shard(p, 200).violations
    record(15, bad, "lambda1, lambda2 <= 200, p in {5,7}")
