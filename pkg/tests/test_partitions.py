from hypothesis import given, settings, strategies as st

from sl2coh.partitions import (
    B_Ac_table,
    compositions_count,
    compositions_iter,
    count_B_Ac,
    count_pAn,
    pAn_table,
    partition_count,
    partition_count_pentagonal,
)


def test_partition_counts():
    assert partition_count(0) == 1
    assert partition_count(5) == 7
    assert partition_count(100) == 190569292
    assert all(partition_count(n) == partition_count_pentagonal(n) for n in range(150))


def test_compositions():
    assert list(compositions_iter(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert compositions_count(1) == 1
    assert all(len(list(compositions_iter(n))) == compositions_count(n) for n in range(1, 11))


def test_power_partitions():
    assert count_pAn(4, 2, 2) == 1
    assert count_pAn(3, 3, 2) == 1
    assert count_pAn(6, 2, 2, min_exp=1) == 1  # 2 + 4
    assert count_pAn(5, 2, 2, min_exp=1) == 0


def test_B_Ac():
    assert count_B_Ac(4, (2,), 2) == 1
    assert count_B_Ac(0, (1, 2), 3) == 0
    table = B_Ac_table((1, 2), 3, 500)
    assert table == [count_B_Ac(m, (1, 2), 3) for m in range(501)]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3000), st.integers(1, 6), st.sampled_from([2, 3, 5]))
def test_composition_identity(m, n, p):
    assert count_pAn(m, n, p) == sum(count_B_Ac(m, c, p) for c in compositions_iter(n))


def test_table_matches_counts():
    T = pAn_table(700, 7, 3)
    assert all(T[n, m] == count_pAn(m, n, 3) for n in range(1, 8) for m in range(701))


def test_table_large_sweep_stays_small():
    # frozen: largest p_{A,n}(m) for p = 2, n <= 15, m <= 10^5
    assert int(pAn_table(10**5, 15, 2).max()) == 4952
