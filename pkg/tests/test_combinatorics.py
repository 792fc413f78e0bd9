import pytest
from hypothesis import given, settings, strategies as st

from overrank.combinatorics import (
    ENUMERATION_LIMIT,
    Overpartition,
    RankTable,
    brute_rank_counts,
    counts_as_mapping,
    enumerate_overpartitions,
    iter_overpartitions,
    m2_rank,
    monotonicity_report,
    residue_counts,
)
from overrank.errors import DomainError, RangeError, SizeLimitError


def test_small_enumerations_by_hand():
    assert enumerate_overpartitions(0) == [Overpartition()]
    ones = {str(p) for p in enumerate_overpartitions(1)}
    assert ones == {"(1)", "(1̅)"}
    assert len(enumerate_overpartitions(3)) == 8


def test_counts_match_oracle(pbar_ref):
    ref = pbar_ref(16)
    for n in range(16):
        assert len(enumerate_overpartitions(n)) == ref[n]


def test_enumeration_is_duplicate_free_and_ordered():
    ops = enumerate_overpartitions(9)
    keys = [(p.parts, p.flags) for p in ops]
    assert len(set(keys)) == len(keys)
    assert keys == sorted(keys)


def test_enumeration_guards():
    with pytest.raises(SizeLimitError):
        enumerate_overpartitions(ENUMERATION_LIMIT + 1)
    with pytest.raises(DomainError):
        enumerate_overpartitions(-1)


def test_overpartition_validation():
    with pytest.raises(DomainError):
        Overpartition((1, 2))
    with pytest.raises(DomainError):
        Overpartition((2, 1), {3})
    with pytest.raises(DomainError):
        Overpartition((0,))


def test_rank_examples():
    # both overpartitions of 1 have rank 0
    assert m2_rank(Overpartition((1,))) == 0
    assert m2_rank(Overpartition((1,), {1})) == 0
    # ceil(l/2) - #parts + #odd plain parts - chi, worked by hand
    assert m2_rank(Overpartition((3,))) == 1
    assert m2_rank(Overpartition((3,), {3})) == 1
    assert m2_rank(Overpartition((2, 1))) == 0
    assert m2_rank(Overpartition((2, 1), {2})) == 0
    assert m2_rank(Overpartition((2, 1), {1})) == -1
    assert m2_rank(Overpartition((2, 1), {1, 2})) == -1
    assert m2_rank(Overpartition((1, 1, 1))) == 0
    assert m2_rank(Overpartition((1, 1, 1), {1})) == 0


def test_low_order_histograms():
    assert brute_rank_counts(1) == {0: 2}
    assert brute_rank_counts(3) == {-1: 2, 0: 4, 1: 2}


@given(st.integers(min_value=0, max_value=14))
@settings(max_examples=15, deadline=None)
def test_rank_distribution_is_symmetric(n):
    hist = brute_rank_counts(n)
    assert all(hist.get(-m, 0) == v for m, v in hist.items())
    assert all(abs(m) <= n for m in hist)


def test_rank_table_queries():
    t = RankTable.brute(8)
    assert t.count(0, 1) == 2
    assert t.count(9, 3) == 0
    with pytest.raises(RangeError):
        t.count(0, 9)
    assert t.is_symmetric()
    assert t.totals[:5] == (1, 2, 4, 8, 14)
    assert counts_as_mapping(t)[(0, 3)] == 4


def test_residue_counts():
    t = RankTable.brute(6)
    rows = [residue_counts(t, a, 3) for a in range(3)]
    assert [r[3] for r in rows] == [4, 2, 2]
    assert [sum(r[n] for r in rows) for n in range(7)] == list(t.totals)
    with pytest.raises(DomainError):
        residue_counts(t, 3, 3)


def test_monotonicity_report_rule():
    rep = monotonicity_report(RankTable.brute(12), 0)
    assert rep.passed and rep.recheck()
    with pytest.raises(DomainError):
        monotonicity_report(RankTable.brute(2), -1)


def test_iteration_is_lazy():
    it = iter_overpartitions(40)
    assert next(it).size == 40
