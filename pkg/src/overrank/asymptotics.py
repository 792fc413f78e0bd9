"""Asymptotic checks: cone limits, Tauberian ratios, growth ratios and inequality scans.

Exact counts come from the cyclotomic dissection; everything that touches
e^{pi sqrt n} is evaluated in log space so nothing overflows.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, RangeError, TailBoundError
from .modular import ConeSpec, EvalContext, appell1_on_double
from .qseries import dissection_table, overpartition_series
from .report import ScanReport

LIMIT_FINAL = 1e-3
TAIL_FRACTION = 1e-6


@dataclass(frozen=True)
class InghamParams:
    """Constants (A, lambda, alpha) of the Tauberian growth hypothesis."""

    A: float
    lam: float
    alpha: float

    def __post_init__(self):
        if not self.A > 0:
            raise DomainError("A must be positive")

    @classmethod
    def for_modulus(cls, c: int = 1) -> "InghamParams":
        """A = pi^2/4, alpha = 1/2, lambda = 1/(2 c sqrt(pi)); c = 1 gives p-bar."""
        return cls(math.pi**2 / 4, 1 / (2 * c * math.sqrt(math.pi)), 0.5)


IngamParams = InghamParams


def ingham_predict(p: InghamParams, n: int) -> float:
    """(lambda / (2 sqrt pi)) A^{alpha/2 + 1/4} n^{-(alpha/2 + 3/4)} e^{2 sqrt(A n)}."""
    if n < 1:
        raise DomainError("n must be >= 1")
    log_mag = (p.alpha / 2 + 0.25) * math.log(p.A) - (p.alpha / 2 + 0.75) * math.log(n) + 2 * math.sqrt(p.A * n)
    return p.lam / (2 * math.sqrt(math.pi)) * math.exp(log_mag)


def closed_form(n: int, c: int) -> float:
    """e^{pi sqrt n} / (8 c n)."""
    return math.exp(math.pi * math.sqrt(n)) / (8 * c * n)


# ---------------------------------------------------------------------------
# cone limit of A_1(+-z, tau; 2 tau)


def limit_rays(delta: float) -> tuple:
    return (0.0, delta / 2, delta, -delta)


def appell_limit_scan(z: float, delta: float, steps: int = 8, x0: float = 1.0, ctx=None, check_direct: int = 3) -> ScanReport:
    """|A_1(+-z, tau_k; 2 tau_k)| along eps_k = 2^{-k} (1 + i d) x0, tau = i eps / (2 pi).

    Rays d in {0, delta/2, delta, -delta}. Passing requires strict decrease
    from k = 2 on and a final magnitude below 1e-3 (harness thresholds).
    Values come from the S-transformed evaluation; for the first
    ``check_direct`` steps the direct Lerch sum is compared against it.
    """
    if not 0 < z < 0.5:
        raise DomainError(f"z must lie in (0, 1/2), got {z}")
    if not delta > 0:
        raise DomainError("cone aperture must be positive")
    if steps < 3:
        raise DomainError("steps must be >= 3")
    ctx = ctx or EvalContext()
    report = ScanReport(
        "appell_limit",
        rule="lt",
        params={"z": z, "delta": delta, "steps": steps, "x0": x0},
        notes=[f"harness thresholds: strict decrease from k=2, final magnitude < {LIMIT_FINAL:g}"],
    )
    for d in limit_rays(delta):
        for sign in (1, -1):
            mags = []
            for k in range(steps):
                cone = ConeSpec(delta, 2.0**-k * complex(1, d) * x0)
                tau = cone.tau
                value = appell1_on_double(sign * z, tau, ctx, method="transformed")
                mags.append(abs(value))
                base = {"ray": d, "sign": sign, "k": k}
                if k < check_direct:
                    direct = appell1_on_double(sign * z, tau, ctx, method="direct")
                    report.add({**base, "check": "direct_vs_transformed"}, abs(direct - value), 1e-9)
                if k >= 3:
                    report.add({**base, "check": "decrease"}, mags[k], mags[k - 1])
            report.add({"ray": d, "sign": sign, "k": steps - 1, "check": "final"}, mags[-1], LIMIT_FINAL)
            report.notes.append(f"ray={d:g} sign={sign:+d}: " + " ".join(f"{m:.3e}" for m in mags))
    return report


# ---------------------------------------------------------------------------
# exact tables


@lru_cache(maxsize=16)
def residue_table(c: int, trunc: int) -> tuple:
    """N2(a, c, n) for all a and n < trunc (cached, read-only)."""
    return tuple(tuple(row) for row in dissection_table(c, trunc))


@lru_cache(maxsize=4)
def pbar_table(trunc: int) -> tuple:
    return tuple(overpartition_series(trunc))


def _row(a: int, c: int, n_needed: int, table=None):
    if c < 3 or c % 2 == 0:
        raise DomainError(f"modulus must be odd and >= 3, got {c}")
    if not 0 <= a < c:
        raise DomainError(f"residue a={a} outside 0..{c - 1}")
    if table is None:
        return residue_table(c, n_needed)[a]
    row = table[a] if len(table) == c and isinstance(table[0], (list, tuple)) else table
    if len(row) < n_needed:
        raise RangeError(f"table holds n < {len(row)}, need n < {n_needed}")
    return row


# ---------------------------------------------------------------------------
# Tauberian limit


def tauberian_closed_form(eps: complex, c: int) -> complex:
    """(eps^{1/2} / (2 c sqrt pi)) e^{pi^2 / (4 eps)} (principal root)."""
    eps = complex(eps)
    return cmath.sqrt(eps) / (2 * c * math.sqrt(math.pi)) * cmath.exp(math.pi**2 / (4 * eps))


def tail_bound(eps: complex, trunc: int) -> float:
    """Bound on sum_{n >= trunc} p-bar(n) |e^{-eps n}| using p-bar(n) <= e^{pi sqrt n}.

    With f(x) = pi sqrt x - Re(eps) x concave and f'(trunc) < 0 the tail is
    at most e^{f(trunc)} (1 + 1/|f'(trunc)|).
    """
    x = complex(eps).real
    slope = math.pi / (2 * math.sqrt(trunc)) - x
    if slope >= 0:
        return math.inf
    f = math.pi * math.sqrt(trunc) - x * trunc
    return math.exp(f) * (1 + 1 / -slope)


def tauberian_ratio(a: int, c: int, cone: ConeSpec, trunc: int = 3000, table=None) -> complex:
    """sum_{n < trunc} N2(a,c,n) e^{-eps n} divided by its predicted main term."""
    if not isinstance(cone, ConeSpec):
        raise DomainError("cone must be a ConeSpec")
    row = _row(a, c, trunc, table)
    eps = cone.eps
    total = 0j
    for n in range(trunc):
        v = row[n]
        if v:
            total += cmath.exp(math.log(v) - eps * n)
    tail = tail_bound(eps, trunc)
    if not tail < TAIL_FRACTION * abs(total):
        raise TailBoundError(f"trunc={trunc} too small for eps={eps}: tail bound {tail:.3g} vs partial sum {abs(total):.3g}")
    return total / tauberian_closed_form(eps, c)


def tauberian_scan(a: int, c: int, eps_values=(0.4, 0.2, 0.1), delta: float = 1.0, ray: float = 0.0, trunc: int = 3000, table=None) -> ScanReport:
    """|ratio - 1| along eps_k (1 + i ray); each step must improve on the previous one."""
    report = ScanReport(
        "tauberian",
        rule="lt",
        params={"a": a, "c": c, "eps": list(eps_values), "delta": delta, "ray": ray, "trunc": trunc},
    )
    prev = None
    for x in eps_values:
        cone = ConeSpec(delta, complex(x, ray * x))
        r = tauberian_ratio(a, c, cone, trunc, table)
        err = abs(r - 1)
        report.notes.append(f"eps={cone.eps}: ratio={r.real:.12g}{r.imag:+.12g}j")
        if prev is not None:
            report.add({"eps": cone.eps, "ratio": r}, err, prev)
        prev = err
    return report


# ---------------------------------------------------------------------------
# growth ratios


def _log_ratio(count: int, scale: float, n: int) -> float:
    if count == 0:
        return 0.0
    return math.exp(math.log(count) + math.log(scale) - math.pi * math.sqrt(n))


def asym_ratio(a: int, c: int, n: int, table=None) -> float:
    """N2(a,c,n) * 8 c n * e^{-pi sqrt n}; math.log handles arbitrarily large ints."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    row = _row(a, c, n + 1, table)
    if n == 0:
        return 0.0
    return _log_ratio(row[n], 8 * c * n, n)


def asym_ratio_gap(a: int, b: int, c: int, n: int, table=None) -> float:
    """|asym_ratio(a,c,n) - asym_ratio(b,c,n)| from the exact count difference.

    The two ratios usually agree to far more digits than a double holds, so
    they are not subtracted as floats.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    ra = _row(a, c, n + 1, table)
    rb = _row(b, c, n + 1, table)
    if n == 0:
        return 0.0
    return _log_ratio(abs(ra[n] - rb[n]), 8 * c * n, n)


def pbar_ratio(n: int) -> float:
    """p-bar(n) * 8 n * e^{-pi sqrt n}."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n == 0:
        return 0.0
    return _log_ratio(pbar_table(n + 1)[n], 8 * n, n)


def equidistribution_gap(c: int, n: int, table=None) -> float:
    """max_a |c N2(a,c,n) / p-bar(n) - 1|, exact until the final conversion."""
    if table is None:
        table = residue_table(c, n + 1)
    total = sum(row[n] for row in table)
    return float(max(abs(Fraction(c * row[n], total) - 1) for row in table))


def asym_sweep(a: int, c: int, ns, table=None) -> ScanReport:
    """Ratios at the given n; the gap to the p-bar/c equidistribution must shrink."""
    ns = sorted(ns)
    trunc = ns[-1] + 1
    if table is None:
        table = residue_table(c, trunc)
    report = ScanReport("asym", rule="lt", params={"a": a, "c": c, "n": ns})
    prev = None
    for n in ns:
        ratio = asym_ratio(a, c, n, table)
        gap = equidistribution_gap(c, n, table)
        report.notes.append(f"n={n}: ratio={ratio:.12g} pbar_ratio={pbar_ratio(n):.12g} gap={gap:.6g}")
        if prev is not None:
            report.add({"n": n, "ratio": ratio}, gap, prev)
        prev = gap
    return report


# ---------------------------------------------------------------------------
# inequality scans

KINDS = ("concavity", "cross", "logconcavity")


def _violations(kind: str, row, n_max: int, mapper=map) -> list:
    """Violating index tuples, each with its minimal index."""
    if kind == "logconcavity":

        def chunk(n):
            return [((n,), n)] if not row[n] * row[n] > row[n - 1] * row[n + 1] else []

        outer = range(2, n_max)
    elif kind == "cross":

        def chunk(n1):
            a, b = row[n1], row[n1 - 1]
            return [((n1, n2), n1) for n2 in range(n1, n_max) if not a * row[n2] > b * row[n2 + 1]]

        outer = range(2, n_max)
    elif kind == "concavity":

        def chunk(n1):
            a = row[n1]
            return [((n1, n2), n1) for n2 in range(n1, n_max - n1 + 1) if not a * row[n2] > row[n1 + n2]]

        outer = range(2, n_max // 2 + 1)
    else:
        raise DomainError(f"unknown inequality {kind!r}; expected one of {KINDS}")
    out = []
    for part in mapper(chunk, outer):
        out.extend(part)
    return out


def inequality_scan(kind: str, a: int, c: int, n_max: int, table=None, mapper=map) -> ScanReport:
    """Exhaustive exact check of one inequality family.

    logconcavity: N(n)^2 > N(n-1) N(n+1) for 2 <= n < n_max.
    cross: N(n1) N(n2) > N(n1-1) N(n2+1) for 2 <= n1 <= n2 < n_max.
    concavity: N(n1) N(n2) > N(n1+n2) for 2 <= n1 <= n2, n1 + n2 <= n_max.
    N0 is one more than the largest minimal index of any violation (2 if
    none), so every tuple with all indices >= N0 passes. Each violation is a
    point ``min index < N0``; a final point requires N0 to leave part of the
    range clean.
    """
    if kind not in KINDS:
        raise DomainError(f"unknown inequality {kind!r}; expected one of {KINDS}")
    if n_max < 4:
        raise DomainError("n_max must be >= 4")
    row = _row(a, c, n_max + 1, table)
    bad = _violations(kind, row, n_max, mapper)
    n0 = max((m for _, m in bad), default=1) + 1
    top = n_max // 2 if kind == "concavity" else n_max - 1
    report = ScanReport(
        f"inequality_{kind}",
        rule="lt",
        params={"kind": kind, "a": a, "c": c, "n_max": n_max},
        threshold_found=n0,
    )
    for idx, m in bad:
        inputs = {"kind": kind, "n1": idx[0], "n2": idx[1] if len(idx) > 1 else None}
        report.add(inputs, m, n0)
    report.add({"kind": kind, "check": "clean_range"}, n0, top + 1)
    report.notes.append(f"violations: {len(bad)}")
    report.notes.append(f"threshold N0: {n0}")
    return report
