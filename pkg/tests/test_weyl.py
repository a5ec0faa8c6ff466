import pytest
from hypothesis import given, settings, strategies as st

from sl2coh.systems import count_N_bruteforce
from sl2coh.weyl import (
    dim_B_cohomology,
    dim_weyl_cohomology,
    low_degree_classifier,
    p2_system_count,
    verify_weyl_bounds,
    weyl_table,
)


def test_B_cohomology_examples():
    assert dim_B_cohomology(0, 0, 3) == 1
    assert dim_B_cohomology(2, 6, 3) == 1
    assert all(dim_B_cohomology(n, 3, 5) == 0 for n in range(10))


@pytest.mark.parametrize("n,m,p,want", [
    (0, 0, 3, 1), (1, 4, 3, 1), (3, 76, 3, 3), (2, 22, 3, 2), (2, 6, 3, 1), (3, 24, 3, 2),
])
def test_weyl_examples(n, m, p, want):
    assert dim_weyl_cohomology(n, m, p) == want
    if n:
        assert low_degree_classifier(n, m, p) == want


def test_lower_bound_instance():
    # 724 = 2(3 + 9 + 27 + 81 + 243) - 2
    assert dim_weyl_cohomology(7, 724, 3) == 10


def test_odd_weight_vanishes():
    assert all(dim_weyl_cohomology(n, 2 * k + 1, p) == 0 for n in range(6) for k in range(30) for p in (2, 3))


def test_invariants_of_H0():
    # H^0(G, V(m)) = 1 exactly for m = 2p^u - 2 (u >= 0), else 0
    for p in (3, 5):
        ones = {2 * p**u - 2 for u in range(9)}
        for m in range(0, 3000, 2):
            assert dim_weyl_cohomology(0, m, p) == int(m in ones)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2500), st.integers(0, 8), st.sampled_from([3, 5]))
def test_shift_to_B(k, n, p):
    m = 2 * k
    assert dim_weyl_cohomology(n, m, p) == dim_B_cohomology(n + 1, m + 2, p)
    assert dim_weyl_cohomology(n, m, p) == count_N_bruteforce(k + 1, n + 1, p)


def test_classifier_agrees_with_general_formula():
    for p in (3, 5):
        for n in (1, 2, 3):
            for m in range(0, 2001, 2):
                assert low_degree_classifier(n, m, p) == dim_weyl_cohomology(n, m, p)


def test_classifier_degree_range():
    with pytest.raises(ValueError):
        low_degree_classifier(4, 10, 3)


def test_p2_route():
    assert dim_weyl_cohomology(0, 0, 2) == 1
    for m in range(0, 300, 2):
        for n in range(7):
            assert dim_weyl_cohomology(n, m, 2) == p2_system_count(m + 2, n + 1)


def test_weyl_table_order():
    rows = weyl_table([4, 0, 2], [1, 0], 3)
    assert [(r["n"], r["m"]) for r in rows] == [(0, 0), (0, 2), (0, 4), (1, 0), (1, 2), (1, 4)]


def test_bounds_sweep():
    for p in (2, 3):
        rep = verify_weyl_bounds(2000, 6, p)
        assert rep.ok, rep.violations[:3]
