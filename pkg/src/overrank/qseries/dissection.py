"""Roots-of-unity dissection of the M2-rank generating function.

N2(a, c, n) is recovered from the values of the generating function at the
c-th roots of unity, computed exactly in Z[zeta_c]. The combination must
collapse to a rational integer divisible by c; anything else is an
arithmetic bug and raises :class:`ConsistencyError`.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from ..combinatorics import ENUMERATION_LIMIT, brute_rank_counts
from ..errors import ConsistencyError, DomainError, SizeLimitError
from ..report import ScanReport
from .rank import _laurent_kernel, _lerch_generic, _pbar, cyclotomic_kernel
from .rings import CyclotomicInt, IntLinearMap, LaurentRing

_kernel_cache: dict = {}


def _base_series(d: int, trunc: int) -> np.ndarray:
    """Eulerian series at a primitive d-th root, reusing longer cached runs."""
    cached = _kernel_cache.get(d)
    if cached is None or len(cached) < trunc:
        cached = cyclotomic_kernel(d, trunc)
        _kernel_cache[d] = cached
    return cached[:trunc]


def _check_modulus(a: int, c: int) -> None:
    if c < 3 or c % 2 == 0:
        raise DomainError(f"dissection needs an odd modulus c >= 3, got {c}")
    if not 0 <= a < c:
        raise DomainError(f"residue a={a} outside 0..{c - 1}")


def series_at_root(c: int, j: int, trunc: int) -> np.ndarray:
    """Coefficients in Z[zeta_c] of the generating function at zeta = zeta_c**j.

    zeta_c**j is a primitive d-th root with d = c/gcd(j, c); its series is
    the Galois image of the series at zeta_d, embedded into Z[zeta_c].
    """
    g = gcd(j, c)
    d = c // g
    if d == 1:
        raise DomainError("zeta = 1 is handled by the overpartition series")
    arr = _base_series(d, trunc)
    if j // g % d != 1:
        arr = IntLinearMap.galois(d, j // g)(arr)
    if d != c:
        arr = IntLinearMap.embedding(d, c)(arr)
    return arr


def _collapse(acc: np.ndarray, c: int, trunc: int, label: str) -> list:
    if acc.shape[1] > 1 and any(v != 0 for v in acc[:, 1:].ravel()):
        raise ConsistencyError(f"{label}: root-of-unity combination is not rational")
    out = []
    for n, v in enumerate(acc[:, 0]):
        q, r = divmod(int(v), c)
        if r or q < 0:
            raise ConsistencyError(f"{label}: {v} at n={n} is not a nonnegative multiple of {c}")
        out.append(q)
    return out


def dissection_table(c: int, trunc: int, form: str = "half") -> list:
    """All residues at once: ``table[a][n] = N2(a, c, n)`` for n < trunc.

    ``form="half"`` pairs j with c-j, using
    c N2(a,c,n) = p(n) + sum_{j=1}^{(c-1)/2} (zeta^{-aj} + zeta^{aj}) R2(zeta^j)_n;
    ``form="full"`` sums zeta^{-aj} R2(zeta^j)_n over every j = 1..c-1.
    """
    _check_modulus(0, c)
    if trunc < 1:
        raise DomainError("trunc must be >= 1")
    if form not in ("half", "full"):
        raise DomainError(f"unknown dissection form {form!r}")
    pb = _pbar(trunc)
    js = range(1, (c - 1) // 2 + 1) if form == "half" else range(1, c)
    roots = {j: series_at_root(c, j, trunc) for j in js}
    table = []
    for a in range(c):
        acc = np.zeros_like(roots[js[0]])
        for j in js:
            w = CyclotomicInt.zeta(c, -a * j)
            if form == "half":
                w = w + CyclotomicInt.zeta(c, a * j)
            acc = acc + IntLinearMap.multiplication(w)(roots[j])
        acc[:, 0] = acc[:, 0] + np.array(pb, dtype=object)
        table.append(_collapse(acc, c, trunc, f"a={a}, c={c}, form={form}"))
    return table


def dissection_series(a: int, c: int, trunc: int, form: str = "half") -> list:
    """N2(a, c, 0..trunc-1) through the exact cyclotomic dissection."""
    _check_modulus(a, c)
    return dissection_table(c, trunc, form)[a]


def _residues_from_hist(hist: dict, c: int) -> list:
    out = [0] * c
    for m, v in hist.items():
        out[m % c] += v
    return out


def cross_validate(trunc: int = 31, moduli=(3, 5, 7, 9)) -> ScanReport:
    """Three-route consistency gate for every n < trunc.

    Brute-force enumeration, the Eulerian series, the Lerch-type series and
    both dissection forms must agree exactly. Each point counts mismatching
    entries; the gate passes when every count is zero.
    """
    if trunc < 0:
        raise DomainError("trunc must be nonnegative")
    if trunc > ENUMERATION_LIMIT + 1:
        raise SizeLimitError(f"cross validation is bounded by the enumeration guard (n <= {ENUMERATION_LIMIT})")
    report = ScanReport("cross_validate", rule="eq", params={"trunc": trunc, "moduli": list(moduli)})
    if trunc == 0:
        report.notes.append("mismatches: 0")
        return report
    brute = [brute_rank_counts(n) for n in range(trunc)]
    eulerian = _laurent_kernel(trunc)
    lerch = [p.to_dict() for p in _lerch_generic(trunc, LaurentRing())]
    pb = _pbar(trunc)
    for n in range(trunc):
        support = set(brute[n]) | set(eulerian[n]) | set(lerch[n])
        report.add(
            {"check": "eulerian_vs_brute", "n": n},
            sum(brute[n].get(m, 0) != eulerian[n].get(m, 0) for m in support),
            0,
        )
        report.add(
            {"check": "lerch_vs_brute", "n": n},
            sum(brute[n].get(m, 0) != lerch[n].get(m, 0) for m in support),
            0,
        )
        report.add({"check": "pbar_vs_brute", "n": n}, int(sum(brute[n].values()) != pb[n]), 0)
    for c in moduli:
        expected = [_residues_from_hist(h, c) for h in brute]
        for form in ("half", "full"):
            table = dissection_table(c, trunc, form)
            for a in range(c):
                report.add(
                    {"check": f"dissection_{form}", "c": c, "a": a},
                    sum(table[a][n] != expected[n][a] for n in range(trunc)),
                    0,
                )
    total = sum(p.measured for p in report.points)
    report.notes.append(f"mismatches: {total}")
    return report
