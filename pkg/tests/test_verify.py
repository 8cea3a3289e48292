"""Agreement suites: shape, ordering, and instance counts."""

import pytest

from liftprop import SuiteReport, verify_paper

SUITE_ORDER = [
    "surjective",
    "injective",
    "dense",
    "induced",
    "pi0-injective",
    "connected",
    "T0",
    "T1",
    "hausdorff",
    "mono",
    "epi",
    "self-lifting",
]


def test_all_suites_pass_at_size_2():
    reports = verify_paper(2)
    assert [r.suite for r in reports] == SUITE_ORDER
    assert all(isinstance(r, SuiteReport) for r in reports)
    assert all(r.mismatches == 0 for r in reports)
    assert all(r.first_mismatch is None for r in reports)


def test_instance_counts_at_size_2():
    by_suite = {r.suite: r.instances for r in verify_paper(2)}
    assert by_suite["surjective"] == 69  # every map of Universe(2)
    assert by_suite["connected"] == 6  # every space of size <= 2
    assert by_suite["mono"] == by_suite["epi"] == by_suite["self-lifting"] == 69


def test_space_suites_grow_with_the_bound():
    by_suite = {r.suite: r.instances for r in verify_paper(3)}
    assert by_suite["connected"] == 35
    assert by_suite["surjective"] == 11345
    assert by_suite["self-lifting"] == 69  # structure suites stay at size 2


def test_size_bound_is_enforced():
    with pytest.raises(ValueError):
        verify_paper(0)
    with pytest.raises(ValueError):
        verify_paper(5)
