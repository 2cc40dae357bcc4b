import pytest

from dlschubert import verify


def _assert_all_pass(results):
    failures = [r for r in results if not r.passed]
    assert not failures, [f"{r.name}: {r.detail}" for r in failures]


def test_braid_suite():
    results = verify.braid_suite(3)
    assert len(results) == 6
    _assert_all_pass(results)


def test_specialize_suite():
    _assert_all_pass(verify.specialize_suite(3))


def test_fgl_suite():
    _assert_all_pass(verify.fgl_suite(3))


def test_pointcount_suite():
    results = verify.pointcount_suite(ns=(2, 3), qs=(2, 3))
    _assert_all_pass(results)
    assert len(results) == 4


def test_stability_suite():
    _assert_all_pass(verify.stability_suite())


def test_run_suites_all_and_selection():
    results = verify.run_suites(["all"], n=3, qs=(2,))
    _assert_all_pass(results)
    only = verify.run_suites(["stability"])
    assert all(r.name.startswith("stability") for r in only)
    with pytest.raises(ValueError):
        verify.run_suites(["nonsense"])


def test_fgl_suite_is_deterministic():
    a = verify.fgl_suite(3, rng_seed=1)
    b = verify.fgl_suite(3, rng_seed=1)
    assert [(r.name, r.passed, r.detail) for r in a] == [
        (r.name, r.passed, r.detail) for r in b
    ]
