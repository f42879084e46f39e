"""Acceptance run: one recorded pass/fail line per criterion.

Every check runs at its stated tolerance.  The lines are printed in the
pytest terminal summary under "acceptance criteria".
"""

import os
import re
import subprocess
import sys
import time
from pathlib import Path

import pytest

from curvesing.bfunction import bs_quasihomogeneous, global_bfunction, local_bfunction_origin
from curvesing.fixtures import B0, GAPS, POLYNOMIALS, TJURINA, TYPO_FIXES
from curvesing.implicitize import implicitize_branch, verify_vanishing
from curvesing.local_algebra import milnor_number, tjurina_number
from curvesing.poly import FactoredB, MultiPoly
from curvesing.report import build_report
from curvesing.semigroup import gap_set

ROOT = Path(__file__).resolve().parent.parent
PAIRS = [(4, 9), (5, 6), (5, 7)]
XY = ("x", "y")
NIGHTLY = os.environ.get("CURVESING_NIGHTLY") == "1"


def _best_time(fn, repeat=5):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return out, best


def test_criterion_1_gap_sets(acceptance):
    problems = []
    slowest = 0.0
    for pair in PAIRS:
        gaps, dt = _best_time(lambda: gap_set(pair))
        slowest = max(slowest, dt)
        if tuple(gaps) != GAPS[pair]:
            problems.append(f"{pair}: {tuple(gaps)}")
        if dt >= 1e-3:
            problems.append(f"{pair}: {dt * 1e3:.2f} ms")
    acceptance("1", not problems, "; ".join(problems) or f"3 gap sets exact, slowest {slowest * 1e3:.3f} ms")
    assert not problems


def test_criterion_2_implicitization(acceptance):
    problems = []
    rows = 0
    fixed = []
    for pair in PAIRS:
        p, q = pair
        for r in GAPS[pair]:
            t0 = time.perf_counter()
            curve = implicitize_branch(pair, r)
            dt = time.perf_counter() - t0
            rows += 1
            f = curve.f
            if not verify_vanishing(curve):
                problems.append(f"{pair} f_{r} does not vanish")
            if f.coeff_of(y=p) != 1 or f.coeff_of(x=q) != -1:
                problems.append(f"{pair} f_{r} leading coefficients")
            printed = MultiPoly.parse(POLYNOMIALS[pair][r], XY)
            if f != printed:
                fix = TYPO_FIXES.get(pair, {}).get(r)
                if fix is not None and f == MultiPoly.parse(fix, XY):
                    fixed.append(f"{pair} f_{r}")
                else:
                    problems.append(f"{pair} f_{r} differs from print")
            if dt >= 1.0:
                problems.append(f"{pair} f_{r} took {dt:.2f} s")
    ok = not problems and rows == 19
    detail = "; ".join(problems) or f"{rows} rows match, typo rows fixed by a y factor: {', '.join(fixed)}"
    acceptance("2", ok, detail)
    assert ok


def test_criterion_3_4_tjurina_milnor(acceptance):
    tau_problems, mu_problems = [], []
    count = 0
    slowest = 0.0
    for pair in PAIRS:
        p, q = pair
        for r in (None,) + GAPS[pair]:
            f = implicitize_branch(pair, r).f
            t0 = time.perf_counter()
            tau = tjurina_number(f)
            t1 = time.perf_counter()
            mu = milnor_number(f)
            t2 = time.perf_counter()
            count += 1
            slowest = max(slowest, t1 - t0, t2 - t1)
            label = f"{pair} f_{0 if r is None else r}"
            if tau != TJURINA[pair][r] or t1 - t0 >= 10:
                tau_problems.append(f"{label}: tau {tau} in {t1 - t0:.2f} s")
            if mu != (p - 1) * (q - 1) or t2 - t1 >= 10:
                mu_problems.append(f"{label}: mu {mu} in {t2 - t1:.2f} s")
    expected = sum(len(t) for t in TJURINA.values())  # 7 + 7 + 8 printed values
    acceptance("3", not tau_problems and count == expected,
               "; ".join(tau_problems) or f"all {count} printed tau values exact, slowest {slowest:.2f} s")
    acceptance("4", not mu_problems, "; ".join(mu_problems) or "mu = (p-1)(q-1) on every row (24/20/24)")
    assert not tau_problems and not mu_problems and count == expected


def test_criterion_5_closed_form(acceptance):
    problems = []
    for pair in PAIRS:
        b, dt = _best_time(lambda: bs_quasihomogeneous(pair))
        want = FactoredB.from_factors(B0[pair])
        factors = sorted((a, c) for a, c, m in b.linear_factors() for _ in range(m))
        if b != want or factors != sorted(B0[pair]):
            problems.append(f"{pair}: {b.format()}")
        if dt >= 1e-3:
            problems.append(f"{pair}: {dt * 1e3:.2f} ms")
    degrees = "/".join(str(bs_quasihomogeneous(pair).degree) for pair in PAIRS)
    acceptance("5", not problems, "; ".join(problems) or f"factor-for-factor match, {degrees} linear factors")
    assert not problems


def test_criterion_6_pipeline_oracles(acceptance):
    P = MultiPoly.parse
    cases = []
    for pair in [(2, 3), (2, 5), (3, 4)]:
        p, q = pair
        f = P(f"y^{p} - x^{q}", XY)
        closed = bs_quasihomogeneous(pair)
        cases.append((f"global y^{p}-x^{q}", global_bfunction, f, closed))
        cases.append((f"local y^{p}-x^{q}", local_bfunction_origin, f, closed))
    cases.append(("global x", global_bfunction, P("x", ["x"]), FactoredB({-1: 1})))
    cases.append(("global x^2+y^2", global_bfunction, P("x^2 + y^2", XY), FactoredB({-1: 2})))
    cases.append(("local x^2(x-1)^3", local_bfunction_origin, P("x^5 - 3*x^4 + 3*x^3 - x^2", ["x"]),
                  FactoredB.from_factors([(1, 1), (2, 1)])))
    problems = []
    slowest = 0.0
    for label, fn, f, want in cases:
        t0 = time.perf_counter()
        got = fn(f)
        dt = time.perf_counter() - t0
        slowest = max(slowest, dt)
        if got != want:
            problems.append(f"{label}: {got.format()} != {want.format()}")
        if dt >= 300:
            problems.append(f"{label}: {dt:.0f} s")
    acceptance("6", not problems, "; ".join(problems) or f"{len(cases)} oracle cases exact, slowest {slowest:.2f} s")
    assert not problems


def _table_check(pair, engine, only=None, budget=3600.0):
    rep = build_report(pair, "local", budget=budget, only=only, engine=engine)
    skipped = [f for f in rep.flags if "budget" in f or "failed" in f]
    wrong = [f for f in rep.flags if "printed ratio" in f or "printed as equal" in f or "neither reading" in f
             or f.startswith("b_0:")]
    readings = sorted({f.split("matches ")[1] for f in rep.flags if "omits the b_0(s) prefix" in f})
    done = [row.r for row in rep.rows if row.r is not None and row.b_local is not None]
    return rep, done, skipped, wrong, readings


def test_criterion_7_b_tables(acceptance):
    parts, problems = [], []
    for pair in PAIRS:
        rep, done, skipped, wrong, readings = _table_check(pair, "auto")
        total = len(GAPS[pair])
        parts.append(f"{pair} {len(done)}/{total} rows")
        problems += wrong
        if pair == (4, 9) and not {14, 23} <= set(done):
            problems.append("(4,9) rows f_14 and f_23 must complete")
        if pair == (5, 7):
            parts.append("(5,7) display reads as " + (", ".join(readings) or "unresolved"))
            if len(readings) != 1:
                problems.append(f"(5,7) prefix readings {readings}")
        parts += [f"skipped {f}" for f in skipped]
    acceptance("7", not problems, "; ".join(problems) or "; ".join(parts) + " (Brieskorn lattice engine)")
    assert not problems


@pytest.mark.nightly
@pytest.mark.skipif(not NIGHTLY, reason="set CURVESING_NIGHTLY=1 for the D-module table run")
def test_criterion_7_dmodule_nightly(acceptance):
    rep, done, skipped, wrong, _ = _table_check((4, 9), "modular", only=[14, 23])
    ok = not wrong and {14, 23} <= set(done)
    acceptance("7-dmodule", ok, "; ".join(wrong + skipped) or "(4,9) f_14 and f_23 via the modular D-module pipeline")
    assert ok


def test_criterion_8_property_suites(acceptance):
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-m", "property", "-p", "no:cacheprovider",
         "--hypothesis-show-statistics", str(ROOT / "tests")],
        cwd=ROOT, capture_output=True, text=True, timeout=900,
    )
    dt = time.perf_counter() - t0
    cases = sum(int(n) for n in re.findall(r"(\d+) passing examples", proc.stdout))
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    ok = proc.returncode == 0 and cases >= 1000 and dt < 300
    acceptance("8", ok, f"{summary}; {cases} property cases in {dt:.0f} s")
    assert ok


def test_criterion_9_determinism(acceptance):
    cmd = [sys.executable, "-m", "curvesing.cli", "report", "--p", "4", "--q", "9", "--bs", "skip", "--format", "json"]
    runs = [subprocess.run(cmd, cwd=ROOT, capture_output=True, timeout=600) for _ in range(2)]
    ok = all(r.returncode == 0 for r in runs) and runs[0].stdout == runs[1].stdout and runs[0].stdout
    acceptance("9", bool(ok), f"two runs, {len(runs[0].stdout)} bytes each, identical={runs[0].stdout == runs[1].stdout}")
    assert ok
