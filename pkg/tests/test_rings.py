import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from overrank.errors import DomainError, RingError
from overrank.qseries.rings import (
    CyclotomicInt,
    CyclotomicRing,
    IntLinearMap,
    LaurentPoly,
    cyclotomic_poly,
    embed,
    totient,
)

coeffs = st.lists(st.integers(-20, 20), max_size=6)
laurent = st.builds(LaurentPoly, st.integers(-4, 4), coeffs)
moduli = st.sampled_from([3, 5, 7, 9, 15])


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(9) == (1, 0, 0, 1, 0, 0, 1)
    assert cyclotomic_poly(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)
    assert [totient(c) for c in (3, 5, 7, 9, 15)] == [2, 4, 6, 6, 8]


def test_laurent_canonical_form():
    p = LaurentPoly(-2, [0, 3, 0, 1, 0])
    assert (p.lo, p.c) == (-1, (3, 0, 1))
    assert LaurentPoly(5, [0, 0]) == LaurentPoly()
    assert LaurentPoly.from_dict({-1: 2, 0: 4, 1: 2}).is_palindromic()


@given(laurent, laurent, laurent)
@settings(max_examples=60, deadline=None)
def test_laurent_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly()


@given(laurent, laurent)
@settings(max_examples=40, deadline=None)
def test_laurent_evaluation_is_a_homomorphism(a, b):
    z = cmath.exp(0.7j)
    assert abs((a * b).evaluate(z) - a.evaluate(z) * b.evaluate(z)) < 1e-6 * (1 + abs(a.evaluate(z) * b.evaluate(z)))


def test_laurent_units():
    assert LaurentPoly.monomial(3).unit_inverse() == LaurentPoly.monomial(-3)
    with pytest.raises(RingError):
        LaurentPoly(0, [1, 1]).unit_inverse()


@given(moduli, coeffs, coeffs)
@settings(max_examples=60, deadline=None)
def test_cyclotomic_matches_complex_arithmetic(c, xs, ys):
    x, y = CyclotomicInt(c, xs), CyclotomicInt(c, ys)
    for got, want in ((x * y, x.to_complex() * y.to_complex()), (x + y, x.to_complex() + y.to_complex())):
        assert abs(got.to_complex() - want) < 1e-8 * (1 + abs(want))


def test_zeta_powers_and_rationality():
    c = 7
    z = CyclotomicInt.zeta(c)
    assert z**c == CyclotomicInt.from_int(c, 1)
    total = sum((CyclotomicInt.zeta(c, k) for k in range(c)), CyclotomicInt.from_int(c, 0))
    assert total.is_rational() and total.to_int() == 0
    assert z.unit_inverse() == CyclotomicInt.zeta(c, -1)


@given(moduli, coeffs)
@settings(max_examples=40, deadline=None)
def test_galois_action(c, xs):
    x = CyclotomicInt(c, xs)
    j = next(k for k in range(2, c) if math.gcd(k, c) == 1)
    want = sum(v * cmath.exp(2j * math.pi * j * k / c) for k, v in enumerate(xs))
    assert abs(x.galois(j).to_complex() - want) < 1e-8 * (1 + abs(want))


def test_galois_requires_coprime_exponent():
    with pytest.raises(DomainError):
        CyclotomicInt.zeta(9).galois(3)


def test_embedding():
    x = CyclotomicInt(3, [2, 5])
    y = embed(x, 9)
    assert abs(y.to_complex() - x.to_complex()) < 1e-12
    with pytest.raises(DomainError):
        embed(x, 10)


def test_linear_maps_agree_with_ring_ops():
    import numpy as np

    c = 9
    w = CyclotomicInt(c, [1, -2, 0, 3])
    xs = [CyclotomicInt(c, [k, 1 - k, 2 * k]) for k in range(4)]
    block = np.array([list(x.rep) for x in xs], dtype=object)
    out = IntLinearMap.multiplication(w)(block)
    assert [CyclotomicInt(c, r) for r in out] == [w * x for x in xs]
    gal = IntLinearMap.galois(c, 2)(block)
    assert [CyclotomicInt(c, r) for r in gal] == [x.galois(2) for x in xs]


def test_ring_descriptor_validation():
    with pytest.raises(DomainError):
        CyclotomicRing(4)
    with pytest.raises(DomainError):
        CyclotomicRing(1)
