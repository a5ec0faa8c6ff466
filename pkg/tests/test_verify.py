import pytest

from sl2coh.verify import SUITES, run_suite

GREEN = ["oracle", "closed-form", "properties", "fibonacci", "low-degree", "ext-bounds",
         "partition-bounds", "p2", "finite-bounds", "stabilization"]


@pytest.mark.parametrize("name", GREEN)
def test_quick_suite_passes(name):
    rep = run_suite(name, "quick")
    assert rep.ok, rep.violations[:3]


def test_suite_names():
    assert set(SUITES) == set(GREEN) | {"ext3"}
    with pytest.raises(KeyError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("oracle", "huge")


def test_threads_do_not_change_results():
    a = run_suite("closed-form", "quick", threads=1)
    b = run_suite("closed-form", "quick", threads=2)
    assert a.summary == b.summary and a.violations == b.violations
