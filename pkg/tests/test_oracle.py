import pytest

from twobridge.cf import KnotParams, evaluate_with_shift, euclid_expansion
from twobridge.census import canonical_representatives
from twobridge.oracle import enumerate_all_expansions, verify_bijection, verify_knot
from twobridge.subtuples import enumerate_allowable

from helpers import fib


@pytest.mark.parametrize("knot, expected", [
    (KnotParams(5, 2), [(-2, 3), (2, 2), (3, -2)]),
    (KnotParams(3, 1), [(-2, 2), (3,)]),
])
def test_enumerate_all_expansions(knot, expected):
    assert enumerate_all_expansions(knot) == expected


def test_31_12_has_eight_expansions():
    found = enumerate_all_expansions(KnotParams(31, 12))
    assert len(found) == 8
    assert verify_bijection(KnotParams(31, 12))


def test_oracle_members_are_expansions_to_99():
    for alpha in range(3, 100, 2):
        for knot in canonical_representatives(alpha):
            found = enumerate_all_expansions(knot)
            assert found == sorted(set(found))
            m = euclid_expansion(knot)
            assert len(found) == len(enumerate_allowable(m))
            if min(m) >= 2:
                assert len(found) == fib(len(m) + 2)
            for n in found:
                assert min(abs(x) for x in n) >= 2
                evaluate_with_shift(knot, n)


def test_verify_bijection_to_99():
    for alpha in range(3, 100, 2):
        for knot in canonical_representatives(alpha):
            check = verify_bijection(knot)
            assert check, (check.missing, check.extra)
            n, failure = verify_knot(knot)
            assert failure is None


def test_long_chains_do_not_recurse():
    # beta = 1 gives an alternating chain of length alpha - 1
    found = enumerate_all_expansions(KnotParams(20001, 1))
    assert found == [(-2,) + (2, -2) * 9999 + (2,), (20001,)]


def test_bijection_check_reports_diff(monkeypatch):
    import twobridge.oracle as oracle

    monkeypatch.setattr(oracle, "enumerate_all_expansions", lambda k: [(2, 2), (9, 9)])
    check = oracle.verify_bijection(KnotParams(5, 2))
    assert not check
    assert check.missing == [(9, 9)]
    assert check.extra == [(-2, 3), (3, -2)]
