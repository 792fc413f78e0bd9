"""Structured scan results and their CSV/JSON serialisation.

Every verification routine returns a :class:`ScanReport`; plain tabulations
(counts, rank tables, dissections) return a :class:`Table`. Both serialise
deterministically through :func:`emit`.
"""

from __future__ import annotations

import csv
import io
import json
import math
import operator
from dataclasses import dataclass, field
from typing import Any, Optional

_RULES = {
    "lt": operator.lt,
    "le": operator.le,
    "gt": operator.gt,
    "ge": operator.ge,
    "eq": operator.eq,
}


@dataclass(frozen=True)
class ScanPoint:
    inputs: dict
    measured: Any
    reference: Any
    passed: bool


@dataclass
class ScanReport:
    """Outcome of a verification or inequality scan.

    ``rule`` names the comparison ``measured <rule> reference`` that decides
    each point, so pass flags can always be recomputed with :meth:`recheck`.
    """

    name: str
    rule: str = "lt"
    params: dict = field(default_factory=dict)
    points: list = field(default_factory=list)
    threshold_found: Optional[int] = None
    notes: list = field(default_factory=list)

    def add(self, inputs: dict, measured, reference) -> ScanPoint:
        point = ScanPoint(dict(inputs), measured, reference, bool(_RULES[self.rule](measured, reference)))
        self.points.append(point)
        return point

    def fail(self, inputs: dict, measured=None, reference=None) -> ScanPoint:
        """Record a point that failed for a reason outside the comparison rule."""
        point = ScanPoint(dict(inputs), measured, reference, False)
        self.points.append(point)
        return point

    @property
    def n_failed(self) -> int:
        return sum(not p.passed for p in self.points)

    @property
    def passed(self) -> bool:
        return self.n_failed == 0

    @property
    def summary(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list:
        return [p for p in self.points if not p.passed]

    def recheck(self) -> bool:
        """True iff every stored pass flag matches its comparison rule."""
        cmp = _RULES[self.rule]
        for p in self.points:
            if p.measured is None or p.reference is None:
                if p.passed:
                    return False
                continue
            if bool(cmp(p.measured, p.reference)) != p.passed:
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "rule": self.rule,
            "summary": self.summary,
            "n_points": len(self.points),
            "n_failed": self.n_failed,
            "threshold_found": self.threshold_found,
            "notes": list(self.notes),
            "points": [
                {"inputs": p.inputs, "measured": p.measured, "reference": p.reference, "passed": p.passed}
                for p in self.points
            ],
        }


@dataclass
class Table:
    name: str
    columns: list
    rows: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": self.params,
            "columns": list(self.columns),
            "rows": [list(r) for r in self.rows],
        }


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return repr(value)
        return format(value, ".17g")
    if isinstance(value, complex):
        return f"{_fmt(value.real)}{'+' if value.imag >= 0 else '-'}{_fmt(abs(value.imag))}j"
    if value is None:
        return ""
    return str(value)


def _jsonable(value):
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, float) and (math.isnan(value) or math.isinf(value)):
        return repr(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _report_csv(report: ScanReport) -> list:
    keys = []
    for p in report.points:
        for k in p.inputs:
            if k not in keys:
                keys.append(k)
    rows = [keys + ["measured", "reference", "passed"]]
    for p in report.points:
        rows.append([_fmt(p.inputs.get(k)) for k in keys] + [_fmt(p.measured), _fmt(p.reference), _fmt(p.passed)])
    return rows


def emit(obj, fmt: str = "csv") -> str:
    """Serialise a :class:`ScanReport` or :class:`Table` to CSV or JSON text.

    CSV: header row, comma separator, LF line ends, reals with 17
    significant digits and integers in full. JSON mirrors ``to_dict``.
    """
    if fmt == "json":
        return json.dumps(_jsonable(obj.to_dict()), separators=(",", ":")) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown output format {fmt!r}")
    if isinstance(obj, ScanReport):
        rows = _report_csv(obj)
    else:
        rows = [list(obj.columns)] + [[_fmt(v) for v in r] for r in obj.rows]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()
