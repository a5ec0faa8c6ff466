from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sl2coh.padic import (
    BoundConstant,
    binomial,
    bound_C,
    expand,
    fibonacci,
    hardy_ramanujan_bound,
    height,
    power_partition_bound,
    r_s_stats,
)


def test_expand_examples():
    assert expand(0, 3).digits == (0,)
    assert expand(12, 3).digits == (0, 1, 1)
    assert expand(138, 3).digits == (0, 1, 0, 2, 1)


def test_expand_rejects_composite_base():
    with pytest.raises(ValueError):
        expand(10, 4)


@given(st.integers(0, 10**9), st.sampled_from([2, 3, 5, 7, 11]))
def test_expansion_invariants(m, p):
    e = expand(m, p)
    assert sum(c * p**i for i, c in enumerate(e.digits)) == m
    assert all(0 <= c < p for c in e.digits)
    assert e.digits[-1] != 0 or m == 0


def test_height_and_stats():
    assert height(12, 3) == 2
    assert r_s_stats(12, 3) == (2, 0)
    assert r_s_stats(9, 3) == (2, 1)
    with pytest.raises(ValueError):
        r_s_stats(0, 3)


def test_fibonacci():
    assert [fibonacci(n) for n in (1, 2, 10)] == [1, 1, 55]
    with pytest.raises(ValueError):
        fibonacci(0)


def test_binomial():
    assert binomial(2, 1) == 2
    assert binomial(2, 3) == 0
    assert binomial(4, 2) == 6
    assert binomial(3, -1) == 0


def test_bound_C_values():
    c1 = bound_C(1)
    # 4 e^(2 pi / sqrt 3), frozen from a 96-bit enclosure
    assert float(c1) == pytest.approx(150.4894661812686, rel=1e-15)
    assert c1.lower <= c1.value
    assert float(bound_C(2)) == pytest.approx(45294.158863046374, rel=1e-14)


def test_bound_C_monotone():
    for n in range(1, 50):
        assert bound_C(n + 1).lower > bound_C(n).value


def test_enclosure_is_consistent_across_precision():
    coarse, fine = bound_C(3, prec=30), bound_C(3, prec=200)
    assert coarse.lower <= fine.lower <= fine.value <= coarse.value


def test_admits_uses_lower_end():
    b = BoundConstant("x", 1, Fraction(99, 10), Fraction(101, 10))
    assert b.admits(9)
    assert not b.admits(10)
    assert b.scaled(2).admits(19)


def test_other_bounds():
    # e^(pi sqrt(2/3)) ~ 13.00, (e^(2 pi / sqrt 3)) * 2 ~ 75.2
    assert 13 < float(hardy_ramanujan_bound(1)) < 13.01
    assert 75 < float(power_partition_bound(1)) < 76
