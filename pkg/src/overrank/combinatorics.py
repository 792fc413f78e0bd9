"""Brute-force overpartition enumeration and exact M2-rank tabulation.

This module is the ground truth the series engines are checked against, so it
works directly from the combinatorial definitions and nothing else.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .errors import DomainError, RangeError, SizeLimitError
from .report import ScanReport

ENUMERATION_LIMIT = 60


@dataclass(frozen=True)
class Overpartition:
    """An overpartition: non-increasing positive parts plus overline flags.

    ``overlined`` holds the distinct part values whose first occurrence
    carries the overline.
    """

    parts: tuple = ()
    overlined: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "overlined", frozenset(self.overlined))
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise DomainError(f"parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts must be non-increasing: {parts}")
        if not self.overlined <= set(parts):
            raise DomainError(f"overlined values {sorted(self.overlined)} are not parts of {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def flags(self) -> tuple:
        """Overline flags for the distinct values, largest value first."""
        return tuple(v in self.overlined for v in _distinct_desc(self.parts))

    def __str__(self):
        out = []
        seen = set()
        for p in self.parts:
            if p in self.overlined and p not in seen:
                out.append(f"{p}̅")
            else:
                out.append(str(p))
            seen.add(p)
        return "(" + ", ".join(out) + ")"


def _distinct_desc(parts: tuple) -> list:
    out = []
    for p in parts:
        if not out or out[-1] != p:
            out.append(p)
    return out


def _partitions_lex(n: int, max_part: int) -> Iterator[tuple]:
    # ascending lexicographic order of the non-increasing part tuples
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in _partitions_lex(n - first, first):
            yield (first,) + rest


def _check_guard(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    if n > ENUMERATION_LIMIT:
        raise SizeLimitError(f"enumeration limited to n <= {ENUMERATION_LIMIT}, got {n}")


def _raw_overpartitions(n: int) -> Iterator[tuple]:
    """Yield (parts, overlined-set) pairs in lexicographic (parts, flags) order."""
    for parts in _partitions_lex(n, n):
        distinct = _distinct_desc(parts)
        k = len(distinct)
        for mask in range(1 << k):
            # flags read most-significant bit first so False < True lexicographically
            yield parts, frozenset(v for i, v in enumerate(distinct) if mask >> (k - 1 - i) & 1)


def iter_overpartitions(n: int) -> Iterator[Overpartition]:
    _check_guard(n)
    for parts, over in _raw_overpartitions(n):
        yield Overpartition(parts, over)


def enumerate_overpartitions(n: int) -> list:
    """Every overpartition of ``n`` exactly once, in lexicographic order.

    Raises SizeLimitError above the enumeration guard (n <= 60).
    """
    return list(iter_overpartitions(n))


def _rank(parts: tuple, overlined: frozenset) -> int:
    if not parts:
        return 0
    largest = parts[0]
    odd_plain = 0
    prev = None
    for p in parts:
        if p & 1 and not (p in overlined and p != prev):
            odd_plain += 1
        prev = p
    chi = 1 if largest & 1 and largest not in overlined else 0
    return (largest + 1) // 2 - len(parts) + odd_plain - chi


def m2_rank(lam: Overpartition) -> int:
    """M2-rank  ceil(l/2) - #parts + #(odd non-overlined parts) - chi.

    chi is 1 exactly when the largest part is odd and not overlined. The
    ``+`` on the odd-part count is the sign that reproduces the two-variable
    generating function (it gives both overpartitions of 1 rank 0).
    """
    return _rank(lam.parts, lam.overlined)


def brute_rank_counts(n: int) -> dict:
    """Histogram {rank: count} over all overpartitions of ``n``."""
    _check_guard(n)
    hist = Counter(_rank(p, o) for p, o in _raw_overpartitions(n))
    return dict(sorted(hist.items()))


@dataclass(frozen=True)
class RankTable:
    """Exact counts N2(m, n) for 0 <= n <= max_n.

    ``rows[n]`` lists the counts for m = -n..n. Immutable once built.
    """

    max_n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.max_n + 1:
            raise DomainError("RankTable needs one row per n in 0..max_n")
        for n, r in enumerate(rows):
            if len(r) != 2 * n + 1:
                raise DomainError(f"row {n} must hold m = -{n}..{n}")

    @classmethod
    def from_histograms(cls, hists) -> "RankTable":
        hists = list(hists)
        rows = []
        for n, h in enumerate(hists):
            if any(abs(m) > n for m, v in h.items() if v):
                raise DomainError(f"rank support exceeds |m| <= n at n={n}")
            rows.append(tuple(h.get(m, 0) for m in range(-n, n + 1)))
        return cls(len(rows) - 1, tuple(rows))

    @classmethod
    def brute(cls, max_n: int) -> "RankTable":
        return cls.from_histograms(brute_rank_counts(n) for n in range(max_n + 1))

    def count(self, m: int, n: int) -> int:
        if not 0 <= n <= self.max_n:
            raise RangeError(f"n={n} outside table range 0..{self.max_n}")
        if abs(m) > n:
            return 0
        return self.rows[n][m + n]

    def histogram(self, n: int) -> dict:
        return {m: v for m, v in zip(range(-n, n + 1), self.rows[n]) if v}

    @property
    def totals(self) -> tuple:
        return tuple(sum(r) for r in self.rows)

    def is_symmetric(self) -> bool:
        return all(r == r[::-1] for r in self.rows)


def residue_counts(table: RankTable, a: int, c: int) -> list:
    """N2(a, c, n) for n = 0..max_n: counts summed over m = a (mod c)."""
    if c < 2:
        raise DomainError(f"modulus must be >= 2, got {c}")
    if not 0 <= a < c:
        raise DomainError(f"residue a={a} outside 0..{c - 1}")
    out = []
    for n, row in enumerate(table.rows):
        out.append(sum(v for m, v in zip(range(-n, n + 1), row) if (m - a) % c == 0))
    return out


def monotonicity_report(table: RankTable, m: int) -> ScanReport:
    """Check N2(m, n) >= N2(m, n-1) for every 1 <= n <= max_n at fixed m >= 0."""
    if m < 0:
        raise DomainError("monotonicity is stated for m >= 0")
    report = ScanReport("monotonicity", rule="ge", params={"m": m, "max_n": table.max_n})
    for n in range(1, table.max_n + 1):
        report.add({"m": m, "n": n}, table.count(m, n), table.count(m, n - 1))
    return report


def counts_as_mapping(table: RankTable) -> Mapping:
    """Flat {(m, n): count} view over the nonzero entries."""
    return {(m, n): v for n in range(table.max_n + 1) for m, v in table.histogram(n).items()}
