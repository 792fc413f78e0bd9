"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import math
import time

import pytest

from overrank.asymptotics import (
    appell_limit_scan,
    equidistribution_gap,
    inequality_scan,
    pbar_ratio,
    residue_table,
    tauberian_ratio,
)
from overrank.combinatorics import RankTable, brute_rank_counts, monotonicity_report
from overrank.modular import ConeSpec, UpperHalfPoint, rank_eval_appell, residual_scan
from overrank.qseries import CyclotomicRing, cross_validate, dissection_table, overpartition_series, rank_series, rank_table


@pytest.fixture
def verdict(request, capsys):
    def record(ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {request.node.name}: {detail}")
        assert ok, detail

    return record


def test_criterion_01_oracle_equivalence(verdict):
    start = time.perf_counter()
    rep = cross_validate(31, moduli=(3, 5, 7, 9))
    elapsed = time.perf_counter() - start
    checks = {p.inputs["check"] for p in rep.points}
    ok = rep.passed and rep.notes == ["mismatches: 0"] and elapsed < 60
    ok = ok and {"eulerian_vs_brute", "lerch_vs_brute", "dissection_half", "dissection_full"} <= checks
    verdict(ok, f"{len(rep.points)} checks over n <= 30, c in (3,5,7,9), {rep.notes[0]}, {elapsed:.1f}s")


def test_criterion_02_pbar_prefix_and_residue_sums(verdict):
    start = time.perf_counter()
    prefix = overpartition_series(5).tolist()
    total = overpartition_series(2001).tolist()
    bad = 0
    for c in (3, 5, 7):
        table = dissection_table(c, 2001)
        bad += sum(sum(col) != p for col, p in zip(zip(*table), total))
    elapsed = time.perf_counter() - start
    ok = prefix == [1, 2, 4, 8, 14] and bad == 0 and elapsed < 120
    verdict(ok, f"prefix {prefix}, residue-sum mismatches {bad} for n <= 2000, {elapsed:.1f}s")


def test_criterion_03_rank_definition_gate(verdict):
    q1, q3 = brute_rank_counts(1), brute_rank_counts(3)
    series = rank_series(4)
    ok = q1 == {0: 2} and q3 == {-1: 2, 0: 4, 1: 2}
    ok = ok and series[1].to_dict() == q1 and series[3].to_dict() == q3
    verdict(ok, f"q^1 {q1}, q^3 {q3} (enumeration and series agree)")


def test_criterion_04_transformation_residuals(verdict):
    start = time.perf_counter()
    worst = {}
    passed = True
    for which, level in [("theta", 1), ("mu", 1), ("h", 1), ("appell", 1), ("appell", 2), ("appell", 3)]:
        rep = residual_scan(which, level, tol=1e-9)
        passed = passed and rep.passed and len(rep.points) == 20
        worst[rep.name] = max(p.measured for p in rep.points)
    elapsed = time.perf_counter() - start
    ok = passed and elapsed < 30
    detail = ", ".join(f"{k}={v:.1e}" for k, v in worst.items())
    verdict(ok, f"max residuals {detail}, {elapsed:.1f}s")


def test_criterion_05_rank_identity_cross_check(verdict):
    q = 0.1
    value = rank_eval_appell(1 / 3, UpperHalfPoint.from_nome(q))
    series = rank_series(40, ring=CyclotomicRing(3))
    partial = sum(c.to_complex() * q**n for n, c in enumerate(series))
    diff = abs(value - partial)
    verdict(diff < 1e-6, f"|difference| = {diff:.2e}")


def test_criterion_06_cone_limit(verdict):
    failed = []
    for z in (1 / 5, 1 / 3, 2 / 5):
        for delta in (0.5, 1.0, 2.0):
            rep = appell_limit_scan(z, delta, steps=8, x0=1.0)
            rays = {p.inputs["ray"] for p in rep.points}
            if not rep.passed or len(rays) != 4:
                failed.append((z, delta))
    verdict(not failed, f"9 (z, delta) pairs x 4 rays x 2 signs, failures: {failed}")


def test_criterion_07_tauberian_approach(verdict):
    lines = []
    ok = True
    for a, c in ((0, 3), (1, 3), (0, 5)):
        err = {e: abs(tauberian_ratio(a, c, ConeSpec(1.0, e), 3000) - 1) for e in (0.4, 0.2, 0.1)}
        ok = ok and err[0.1] < err[0.2] and err[0.1] < err[0.4]
        lines.append(f"({a},{c}): {err[0.4]:.2e} {err[0.2]:.2e} {err[0.1]:.2e}")
    verdict(ok, "|ratio-1| at eps=0.4,0.2,0.1 " + "; ".join(lines))


# gaps snapshotted from the exact tables
EQUI_SNAPSHOT = {
    3: (4.5753023901337714e-11, 2.184101947427016e-38),
    5: (1.6094395456426674e-06, 1.0262709401249115e-22),
    7: (0.0001710983461137847, 6.397483978093969e-16),
}


def test_criterion_08_equidistribution(verdict):
    ok = True
    parts = []
    for c in (3, 5, 7):
        table = residue_table(c, 2001)
        g200, g2000 = equidistribution_gap(c, 200, table), equidistribution_gap(c, 2000, table)
        ok = ok and g2000 < g200
        ok = ok and math.isclose(g200, EQUI_SNAPSHOT[c][0], rel_tol=1e-9) and math.isclose(g2000, EQUI_SNAPSHOT[c][1], rel_tol=1e-9)
        parts.append(f"c={c}: {g200:.2e} -> {g2000:.2e}")
    r1000, r4000 = pbar_ratio(1000), pbar_ratio(4000)
    ok = ok and abs(r4000 - 1) < abs(r1000 - 1)
    ok = ok and math.isclose(r1000, 0.9899341575791237, rel_tol=1e-12) and math.isclose(r4000, 0.9949670787895913, rel_tol=1e-12)
    verdict(ok, "; ".join(parts) + f"; pbar ratio {r1000:.6f} -> {r4000:.6f}")


def test_criterion_09_rank_monotonicity(verdict):
    brute = RankTable.brute(30)
    brute_bad = sum(monotonicity_report(brute, m).n_failed for m in range(0, 31))
    table = rank_table(500)
    table_bad = sum(monotonicity_report(table, m).n_failed for m in range(0, 501))
    verdict(brute_bad == 0 and table_bad == 0, f"violations: brute {brute_bad} (m <= 30, n <= 30), series {table_bad} (n <= 500)")


N0_SNAPSHOT = {
    ("logconcavity", 0): 19,
    ("logconcavity", 1): 18,
    ("cross", 0): 19,
    ("cross", 1): 18,
    ("concavity", 0): 5,
    ("concavity", 1): 7,
}


def test_criterion_10_inequality_scans(verdict):
    ok = True
    found = {}
    for (kind, a), n0 in N0_SNAPSHOT.items():
        n_max = 400 if kind == "concavity" else 1000
        rep = inequality_scan(kind, a, 3, n_max)
        again = inequality_scan(kind, a, 3, n_max)
        violations = [p for p in rep.points if p.inputs.get("check") != "clean_range"]
        above = [p for p in violations if p.measured >= rep.threshold_found]
        ok = ok and rep.passed and not above and rep.threshold_found == n0 and again.to_dict() == rep.to_dict()
        found[f"{kind}/{a}"] = (rep.threshold_found, len(violations))
    verdict(ok, "N0 (violations): " + ", ".join(f"{k}={v[0]} ({v[1]})" for k, v in found.items()))
