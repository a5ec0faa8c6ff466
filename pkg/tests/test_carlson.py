import pytest

from sl2coh.carlson import (
    SimpleLabel,
    all_labels,
    dim_ext_finite,
    dim_ext_finite_kfirst,
    dim_H_finite,
    generic_stabilization_probe,
    iter_carlson_solutions,
    verify_finite_bound,
)


def test_labels():
    with pytest.raises(ValueError):
        SimpleLabel(3, 2, (0, 3))
    with pytest.raises(ValueError):
        SimpleLabel(3, 2, (0,))
    assert SimpleLabel.of_weight(5, 3, 3).weights == (2, 1, 0)
    assert len(list(all_labels(3, 2))) == 9


def test_mismatched_labels_rejected():
    with pytest.raises(ValueError):
        dim_ext_finite(0, SimpleLabel.zero(3, 2), SimpleLabel.zero(3, 1))


def test_trivial_module():
    z = SimpleLabel.zero(3, 2)
    assert dim_ext_finite(0, z, z) == 1
    assert dim_H_finite(0, z) == 1


def test_steinberg_label_kills_positive_degrees():
    for p, s in ((3, 1), (3, 2), (5, 2)):
        st = SimpleLabel(p, s, (p - 1,) * s)
        for f in all_labels(p, s):
            assert all(dim_ext_finite(n, st, f) == 0 for n in range(1, 6))


def test_regression_fixtures():
    d = SimpleLabel(3, 1, (0,))
    # frozen from both enumerators
    assert [dim_ext_finite(2, d, SimpleLabel(3, 1, (f,))) for f in range(3)] == [1, 0, 0]
    assert [dim_H_finite(1, SimpleLabel(3, 1, (f,))) for f in range(3)] == [1, 0, 0]


def test_raw_counts_include_wraparound():
    # condition (5) modulo p - 1 = 2 holds for every k when a = b = 0,
    # so the raw Hom count is the k-window size, not 1
    st = SimpleLabel(3, 1, (2,))
    assert dim_ext_finite(0, st, st) == 3
    assert dim_H_finite(0, SimpleLabel(3, 1, (2,))) == 1


def test_solutions_satisfy_parity():
    d, f = SimpleLabel(5, 2, (1, 3)), SimpleLabel(5, 2, (2, 0))
    for n in range(6):
        for sol in iter_carlson_solutions(n, d, f):
            assert 2 * sum(sol.a) + sum(sol.b) == n


def test_two_enumerators_agree():
    for p, s in ((3, 1), (3, 2), (5, 1)):
        labels = list(all_labels(p, s))
        for d in labels:
            for f in labels:
                for n in range(6):
                    assert dim_ext_finite(n, d, f) == dim_ext_finite_kfirst(n, d, f)


def test_bound_sweep():
    rep = verify_finite_bound(3, [1, 2], 5)
    assert rep.ok, rep.violations[:3]


def test_probe():
    r = generic_stabilization_probe(2, 0, 3, 2, 5)
    assert [row["dim"] for row in r.rows] == [1, 0, 0, 0]
    assert r.summary["tail_constant"] and r.summary["constant_from_s"] == 3
    again = generic_stabilization_probe(2, 0, 3, 2, 5)
    assert again.rows == r.rows
    with pytest.raises(ValueError):
        generic_stabilization_probe(1, 9, 3, 2, 4)
