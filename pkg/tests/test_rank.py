import cmath
import math

import pytest

from overrank.combinatorics import RankTable, brute_rank_counts
from overrank.errors import DomainError, SizeLimitError
from overrank.qseries import (
    ComplexRing,
    CyclotomicRing,
    IntegerRing,
    LaurentPoly,
    LaurentRing,
    overpartition_series,
    pbar,
    rank_series,
    rank_table,
)
from overrank.qseries.rank import LAURENT_LIMIT, lerch_terms


def test_pbar_prefix():
    assert overpartition_series(11).tolist() == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232]
    assert pbar(10) == 232


def test_pbar_against_theta_recurrence(pbar_ref):
    assert tuple(overpartition_series(600)) == pbar_ref(600)


def test_low_coefficients():
    s = rank_series(4)
    assert s[1] == LaurentPoly.from_dict({0: 2})
    assert s[3] == LaurentPoly.from_dict({-1: 2, 0: 4, 1: 2})


@pytest.mark.parametrize("form", ["eulerian", "lerch"])
def test_forms_agree_with_enumeration(form):
    s = rank_series(16, form=form, fast=False)
    for n in range(16):
        assert s[n].to_dict() == brute_rank_counts(n)


def test_kernel_matches_generic_route():
    assert rank_series(25) == rank_series(25, fast=False)
    cyc = CyclotomicRing(7, 3)
    assert rank_series(20, ring=cyc) == rank_series(20, ring=cyc, fast=False)


def test_specialisations_are_consistent():
    n = 14
    lau = rank_series(n)
    ints = rank_series(n, ring=IntegerRing())
    assert ints.tolist() == list(overpartition_series(n))
    z = 0.21
    cpx = rank_series(n, form="lerch", ring=ComplexRing(z))
    zeta = cmath.exp(2j * math.pi * z)
    for k in range(n):
        assert abs(cpx[k] - lau[k].evaluate(zeta)) < 1e-8 * (1 + abs(cpx[k]))
    cyc = rank_series(n, ring=CyclotomicRing(5))
    for k in range(n):
        assert abs(cyc[k].to_complex() - lau[k].evaluate(cmath.exp(2j * math.pi / 5))) < 1e-6


def test_symmetry_and_totals():
    t = rank_table(120)
    assert t.is_symmetric()
    assert t.totals == tuple(overpartition_series(121))


def test_rank_table_matches_brute():
    assert rank_table(20) == RankTable.brute(20)


def test_lerch_truncation_window():
    keep = lerch_terms(30)
    assert 0 in keep and 5 in keep and 6 not in keep
    # conservative: m^2 - 4m < trunc keeps every m with m^2 + 2m < trunc
    assert -7 in keep and -8 not in keep


def test_guards():
    with pytest.raises(DomainError):
        rank_series(0)
    with pytest.raises(DomainError):
        rank_series(5, form="other")
    with pytest.raises(DomainError):
        rank_series(5, form="lerch", fast=True)
    with pytest.raises(SizeLimitError):
        rank_series(LAURENT_LIMIT + 1)
