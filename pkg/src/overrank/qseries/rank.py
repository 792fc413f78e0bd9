"""Overpartition counts and the two-variable M2-rank generating function.

Two algebraically different forms of the generating function are provided:

* the Eulerian sum  sum_n (-1;q)_{2n} q^n / ((zeta q^2;q^2)_n (zeta^-1 q^2;q^2)_n)
* the Lerch-type bilateral sum multiplied by (-q;q)_inf/(q;q)_inf.

The Eulerian form is the production route. For Laurent and cyclotomic
coefficients it runs through vectorised kernels; every other combination
goes through the generic :class:`FormalSeries` arithmetic, which also serves
as the reference the kernels are tested against.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..combinatorics import RankTable
from ..errors import ConsistencyError, DomainError, SizeLimitError
from .rings import CyclotomicInt, CyclotomicRing, IntLinearMap, LaurentPoly, LaurentRing, totient
from .series import FormalSeries, pochhammer_series

LAURENT_LIMIT = 2000


@lru_cache(maxsize=8)
def _pbar(trunc: int) -> tuple:
    num = pochhammer_series(-1, 1, trunc)  # (-q;q)_inf
    for k in range(1, trunc):
        num = num.div_binomial(1, k)  # divide by each factor of (q;q)_inf
    return tuple(int(v) for v in num)


def overpartition_series(trunc: int) -> FormalSeries:
    """p-bar(0..trunc-1) as the coefficients of (-q;q)_inf / (q;q)_inf."""
    if trunc < 1:
        raise DomainError("trunc must be >= 1")
    return FormalSeries(_pbar(trunc))


def pbar(n: int) -> int:
    return _pbar(n + 1)[n]


# ---------------------------------------------------------------------------
# generic routes


def _eulerian_generic(trunc: int, ring) -> FormalSeries:
    one, zero = ring.one, ring.zero
    total = FormalSeries.constant(one, trunc, zero)
    for n in range(1, trunc):
        num = pochhammer_series(-one, 0, trunc, n=2 * n, one=one, zero=zero).shift(n)
        den = pochhammer_series(ring.zeta, 2, trunc, n=n, step=2, one=one, zero=zero)
        den = den * pochhammer_series(ring.zeta_inv, 2, trunc, n=n, step=2, one=one, zero=zero)
        total = total + num * den.inverse()
    return total


def lerch_terms(trunc: int) -> list:
    """Indices n of the bilateral sum kept below q**trunc (conservative bound)."""
    keep = []
    n = 0
    while n * n < trunc:
        keep.append(n)
        n += 1
    m = 1
    while m * m - 4 * m < trunc:
        keep.append(-m)
        m += 1
    return keep


def _lerch_generic(trunc: int, ring) -> FormalSeries:
    one, zero = ring.one, ring.zero
    zeta, zinv = ring.zeta, ring.zeta_inv
    numer = (one - zeta) * (one - zinv)
    bracket = FormalSeries.constant(zero, trunc, zero)
    for n in lerch_terms(trunc):
        if n == 0:
            # (1-zeta)(1-1/zeta) cancels against the n = 0 denominator
            bracket = bracket + one
            continue
        sign = -1 if n % 2 else 1
        if n > 0:
            expo = n * n + 2 * n
            coef = numer * sign
            k = 2 * n
            a1, a2 = zeta, zinv
        else:
            # 1/(1 - zeta q^{-2m}) = -zeta^{-1} q^{2m} / (1 - zeta^{-1} q^{2m}), likewise for zeta^{-1}
            m = -n
            expo = n * n + 2 * n + 4 * m
            coef = numer * sign * (-zinv) * (-zeta)
            k = 2 * m
            a1, a2 = zinv, zeta
        if expo >= trunc:
            continue
        term = FormalSeries.monomial(coef, expo, trunc, zero).div_binomial(a1, k).div_binomial(a2, k)
        bracket = bracket + term
    prefactor = pochhammer_series(-one, 1, trunc, one=one, zero=zero)
    prefactor = prefactor * pochhammer_series(one, 1, trunc, one=one, zero=zero).inverse()
    return prefactor * bracket


# ---------------------------------------------------------------------------
# vectorised Eulerian kernel


def _eulerian_recurrence(trunc: int, one_row, shape: tuple, mul_zeta, mul_zeta_inv) -> np.ndarray:
    """Sum of the Eulerian terms via term_n = term_{n-1} * q (1+q^{2n-2})(1+q^{2n-1}) / D_n.

    ``D_n = (1 - zeta q^{2n})(1 - zeta^{-1} q^{2n})``. Arrays are indexed by
    the q-exponent along axis 0; term_n vanishes below q^n, so work starts there.
    """
    term = np.zeros((trunc,) + shape, dtype=object)
    term[0] = one_row
    total = term.copy()
    for n in range(1, trunc):
        lo = n
        term[1:] = term[:-1].copy()
        term[0] = 0
        for k in (2 * n - 2, 2 * n - 1):
            if k == 0:
                term[lo:] = term[lo:] * 2
            elif lo + k < trunc:
                term[lo + k :] = term[lo + k :] + term[lo : trunc - k]
        s = 2 * n
        for mul in (mul_zeta, mul_zeta_inv):
            for start in range(lo + s, trunc, s):
                stop = min(start + s, trunc)
                term[start:stop] = term[start:stop] + mul(term[start - s : stop - s])
        total[lo:] = total[lo:] + term[lo:]
    return total


def _laurent_kernel(trunc: int) -> list:
    """Eulerian form with zeta-polynomials packed into single integers.

    Every coefficient of the Eulerian expansion is nonnegative and bounded by
    p-bar(n), so slot m of the packed integer (base 2**bits) holds the
    coefficient of zeta**m exactly. |m| <= n/2 throughout.
    """
    pb = _pbar(trunc)
    bits = -(-(pb[-1].bit_length() + 1) // 8) * 8
    offset = trunc // 2 + 1
    slots = 2 * offset + 1
    one = 1 << (offset * bits)
    total = _eulerian_recurrence(trunc, one, (), lambda b: b << bits, lambda b: b >> bits)
    nbytes = bits // 8
    width = slots * nbytes
    out = []
    for n in range(trunc):
        raw = int(total[n]).to_bytes(width, "little")
        poly = {}
        for k in range(slots):
            v = int.from_bytes(raw[k * nbytes : (k + 1) * nbytes], "little")
            if v:
                poly[k - offset] = v
        if sum(poly.values()) != pb[n]:
            raise ConsistencyError(f"packed Laurent kernel lost mass at q^{n}")
        out.append(poly)
    return out


def cyclotomic_kernel(c: int, trunc: int, power: int = 1) -> np.ndarray:
    """Coefficient vectors (trunc x phi(c)) of the Eulerian series at zeta_c**power."""
    ring = CyclotomicRing(c, power)
    d = totient(c)
    one = np.zeros(d, dtype=object)
    one[0] = 1
    return _eulerian_recurrence(
        trunc,
        one,
        (d,),
        IntLinearMap.multiplication(ring.zeta),
        IntLinearMap.multiplication(ring.zeta_inv),
    )


# ---------------------------------------------------------------------------
# public entry points


def rank_series(trunc: int, form: str = "eulerian", ring=None, fast=None) -> FormalSeries:
    """Truncated generating function sum_{n<trunc} sum_m N2(m,n) zeta^m q^n.

    ``ring`` selects what zeta becomes: ``LaurentRing()`` (exact Laurent
    polynomials), ``CyclotomicRing(c)`` (exact, zeta = zeta_c),
    ``ComplexRing(z)`` (zeta = exp(2 pi i z)) or ``IntegerRing()`` (zeta = 1).
    ``fast`` forces (True) or forbids (False) the vectorised Eulerian kernels;
    by default they are used whenever they apply.
    """
    if trunc < 1:
        raise DomainError("trunc must be >= 1")
    if ring is None:
        ring = LaurentRing()
    if form not in ("eulerian", "lerch"):
        raise DomainError(f"unknown form {form!r}")
    if isinstance(ring, LaurentRing) and trunc > LAURENT_LIMIT:
        raise SizeLimitError(f"Laurent coefficients limited to trunc <= {LAURENT_LIMIT}")
    kernel_ok = form == "eulerian" and isinstance(ring, (LaurentRing, CyclotomicRing))
    if fast and not kernel_ok:
        raise DomainError(f"no vectorised kernel for form={form} ring={ring!r}")
    if fast is None:
        fast = kernel_ok
    if not fast:
        if form == "eulerian":
            return _eulerian_generic(trunc, ring)
        return _lerch_generic(trunc, ring)
    if isinstance(ring, LaurentRing):
        return FormalSeries([LaurentPoly.from_dict(p) for p in _laurent_kernel(trunc)], LaurentPoly())
    arr = cyclotomic_kernel(ring.c, trunc, ring.power)
    return FormalSeries([CyclotomicInt(ring.c, row) for row in arr], ring.zero)


def rank_table(max_n: int) -> RankTable:
    """Exact N2(m, n) for n <= max_n from the Eulerian generating function."""
    if max_n + 1 > LAURENT_LIMIT:
        raise SizeLimitError(f"rank tables limited to max_n < {LAURENT_LIMIT}")
    return RankTable.from_histograms(_laurent_kernel(max_n + 1))
