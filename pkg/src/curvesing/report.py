"""End-to-end tables for the family ``f_r`` attached to a coprime pair.

Each row carries the implicit equation, the Puiseux characteristic, the
Tjurina and Milnor numbers and (optionally) the local b-function together
with its ratio against ``b_0``.  Rows are compared with the published tables
in :mod:`curvesing.fixtures` and every disagreement becomes a flag.
"""

from __future__ import annotations

import json
import multiprocessing as mp
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing.connection import wait
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import fixtures
from .bfunction import (ENGINES, BsRatio, bs_quasihomogeneous, bs_ratio, global_bfunction, local_bfunction,
                        modular_bfunction)
from .implicitize import implicitize_branch, verify_vanishing
from .local_algebra import milnor_number, tjurina_number
from .poly import ContractError, FactoredB, MultiPoly
from .puiseux import PuiseuxCharacteristic, characteristic_of
from .semigroup import CoprimePair, _as_pair, gap_set

BS_MODES = ("formula", "global", "local", "skip")
FORMATS = ("text", "json", "latex")


@dataclass(frozen=True)
class ReportRow:
    r: Optional[int]
    f: MultiPoly
    characteristic: PuiseuxCharacteristic
    tau: int
    mu: int
    b_local: Optional[FactoredB]
    ratio: Optional[BsRatio]

    @property
    def label(self) -> str:
        return "0" if self.r is None else str(self.r)


@dataclass(frozen=True)
class CurveReport:
    pair: CoprimePair
    rows: Tuple[ReportRow, ...]
    flags: Tuple[str, ...]

    def row(self, r: Optional[int]) -> ReportRow:
        for row in self.rows:
            if row.r == r:
                return row
        raise KeyError(r)

    def tau_groups(self) -> List[Tuple[int, Tuple[str, ...]]]:
        """Rows sharing a Tjurina number, as ``(tau, labels)``."""
        return _groups([(row.tau, row.label) for row in self.rows])

    def b_groups(self) -> List[Tuple[str, Tuple[str, ...]]]:
        """Rows with equal computed b-functions."""
        return _groups([(row.b_local.format(), row.label) for row in self.rows if row.b_local is not None])


def _groups(pairs):
    buckets: Dict[object, List[str]] = {}
    for value, label in pairs:
        buckets.setdefault(value, []).append(label)
    return [(v, tuple(ls)) for v, ls in buckets.items() if len(ls) > 1]


# ---------------------------------------------------------------------------
# budgeted workers
# ---------------------------------------------------------------------------


def _b_task(p: int, q: int, r: Optional[int], mode: str, engine: str = "auto") -> FactoredB:
    f = implicitize_branch((p, q), r).f
    if mode == "local":
        return local_bfunction(f, engine)
    return modular_bfunction(f, local=False) if engine == "modular" else global_bfunction(f)


def _child(conn, fn, args):
    try:
        conn.send(("ok", fn(*args)))
    except BaseException as exc:  # reported back to the parent
        conn.send(("error", f"{type(exc).__name__}: {exc}"))
    finally:
        conn.close()


def run_budgeted(tasks: Dict[object, Tuple[Callable, tuple]], budget: Optional[float],
                 jobs: int = 1) -> Dict[object, Tuple[str, object]]:
    """Run ``tasks`` with a wall-clock budget each.

    Returns ``key -> (status, value)`` with status ``ok``, ``timeout`` or
    ``error``.  Without a budget and with one job, tasks run in-process.
    """
    results: Dict[object, Tuple[str, object]] = {}
    if budget is None and jobs <= 1:
        for key, (fn, args) in tasks.items():
            try:
                results[key] = ("ok", fn(*args))
            except Exception as exc:
                results[key] = ("error", f"{type(exc).__name__}: {exc}")
        return results
    ctx = mp.get_context("fork") if "fork" in mp.get_all_start_methods() else mp.get_context()
    pending = list(tasks.items())
    running = {}
    while pending or running:
        while pending and len(running) < max(1, jobs):
            key, (fn, args) = pending.pop(0)
            recv, send = ctx.Pipe(duplex=False)
            proc = ctx.Process(target=_child, args=(send, fn, args), daemon=True)
            proc.start()
            send.close()
            deadline = None if budget is None else time.monotonic() + budget
            running[recv] = (key, proc, deadline)
        deadlines = [d for _, _, d in running.values() if d is not None]
        timeout = None if not deadlines else max(0.0, min(deadlines) - time.monotonic())
        ready = wait(list(running), timeout)
        for conn in ready:
            key, proc, _ = running.pop(conn)
            try:
                results[key] = conn.recv()
            except EOFError:
                results[key] = ("error", f"worker exited with code {proc.exitcode}")
            proc.join()
        now = time.monotonic()
        for conn, (key, proc, deadline) in list(running.items()):
            if deadline is not None and now >= deadline:
                proc.kill()
                proc.join()
                running.pop(conn)
                results[key] = ("timeout", None)
    return results


# ---------------------------------------------------------------------------
# building
# ---------------------------------------------------------------------------


def _fmt_factors(factors) -> str:
    return FactoredB.from_factors(factors).format() if factors else "1"


def _table_checks(pair: CoprimePair, rows: Sequence[ReportRow], flags: List[str]) -> None:
    key = (pair.p, pair.q)
    printed = fixtures.POLYNOMIALS.get(key)
    if printed is None:
        return
    fixes = fixtures.TYPO_FIXES.get(key, {})
    taus = fixtures.TJURINA[key]
    for row in rows:
        if row.r is not None and row.r in printed:
            text = str(row.f)
            if MultiPoly.parse(printed[row.r], ("x", "y")) != row.f:
                fix = fixes.get(row.r)
                if fix is not None and MultiPoly.parse(fix, ("x", "y")) == row.f:
                    flags.append(f"f_{row.r}: printed '{printed[row.r]}' lacks a y factor; "
                                 f"computed '{text}' matches once it is reinstated")
                else:
                    flags.append(f"f_{row.r}: printed '{printed[row.r]}' differs from computed '{text}'")
        if row.r in taus and taus[row.r] != row.tau:
            flags.append(f"tau(f_{row.label}): printed {taus[row.r]}, computed {row.tau}")
    by_r = {row.r: row for row in rows}
    b0 = by_r.get(None)
    if b0 is not None and b0.b_local is not None:
        printed_b0 = FactoredB.from_factors(fixtures.B0[key])
        if b0.b_local != printed_b0:
            flags.append(f"b_0: printed {printed_b0.format()}, computed {b0.b_local.format()}")
    ratios = fixtures.RATIOS.get(key, {})
    for row in rows:
        if row.r is None or row.b_local is None or row.r not in ratios:
            continue
        claim = ratios[row.r]
        if isinstance(claim, str):
            other = None if claim == "b_0" else int(claim[2:])
            ref = by_r.get(other)
            if ref is not None and ref.b_local is not None:
                if ref.b_local != row.b_local:
                    flags.append(f"b_{row.r}: printed as equal to {claim}, computed "
                                 f"{row.b_local.format()} vs {ref.b_local.format()}")
                continue
            if other is None:
                claim = ([], [])
            else:
                claim = ratios[other]
        gained, lost = (FactoredB.from_factors(c) for c in claim)
        if row.ratio is None:
            continue
        prefixed = row.ratio.gained == gained and row.ratio.lost == lost
        if key in fixtures.PREFIX_OMITTED:
            # the display may also be read as b_r equal to the bare quotient
            literal = row.b_local.expand() * lost.expand() == gained.expand()
            reading = "b_0(s) times the displayed quotient" if prefixed else (
                "the displayed quotient alone" if literal else "neither reading")
            flags.append(f"b_{row.r}: display omits the b_0(s) prefix; computed value matches {reading}")
            if prefixed or literal:
                continue
        if not prefixed:
            flags.append(f"b_{row.r}: printed ratio {_fmt_factors(claim[0])}/{_fmt_factors(claim[1])}, "
                         f"computed {row.ratio.gained.format()}/{row.ratio.lost.format()}")


def build_report(pair, bs_mode: str = "skip", budget: Optional[float] = None, jobs: int = 1,
                 only: Optional[Sequence[int]] = None, engine: str = "auto") -> CurveReport:
    """Compute every row for ``pair`` (``f_0`` plus one row per gap).

    ``engine`` picks the b-function algorithm for the local and global
    modes (see :func:`curvesing.bfunction.local_bfunction`); the Brieskorn
    lattice only knows local b-functions.
    """
    pair = _as_pair(pair)
    if bs_mode not in BS_MODES:
        raise ContractError(f"unknown b-function mode {bs_mode!r}")
    if engine not in ENGINES:
        raise ContractError(f"unknown engine {engine!r}")
    if engine == "brieskorn" and bs_mode == "global":
        raise ContractError("the Brieskorn lattice engine computes local b-functions only")
    p, q = pair
    gaps = list(gap_set(pair))
    if only is not None:
        for r in only:
            if r not in gaps:
                raise ValueError(f"r={r} is not in G({p},{q})")
        gaps = [r for r in gaps if r in set(only)]
    flags: List[str] = []
    base = []
    for r in [None] + gaps:
        curve = implicitize_branch(pair, r)
        if not verify_vanishing(curve):
            flags.append(f"f_{0 if r is None else r}: does not vanish on its parametrization")
        char = characteristic_of(p, [q] if r is None else [q, r])
        base.append((r, curve.f, char, tjurina_number(curve.f), milnor_number(curve.f)))
    formula = bs_quasihomogeneous(pair)
    bvals: Dict[Optional[int], Optional[FactoredB]] = {r: None for r, *_ in base}
    if bs_mode == "formula":
        bvals[None] = formula
    elif bs_mode in ("global", "local"):
        tasks = {r: (_b_task, (p, q, r, bs_mode, engine)) for r, *_ in base}
        results = run_budgeted(tasks, budget, jobs)
        for r, *_ in base:
            status, value = results[r]
            label = 0 if r is None else r
            if status == "ok":
                bvals[r] = value
            elif status == "timeout":
                flags.append(f"b_{label}: skipped after exceeding the {budget:g} s budget")
            else:
                flags.append(f"b_{label}: computation failed ({value})")
        if bvals[None] is None:
            bvals[None] = formula
            flags.append("b_0: taken from the quasi-homogeneous closed form")
        elif bvals[None] != formula:
            flags.append(f"b_0: computed {bvals[None].format()}, closed form {formula.format()}")
    b0 = bvals[None]
    rows = []
    for r, f, char, tau, mu in base:
        b = bvals[r]
        ratio = bs_ratio(b, b0) if b is not None and b0 is not None else None
        rows.append(ReportRow(r, f, char, tau, mu, b, ratio))
    _table_checks(pair, rows, flags)
    return CurveReport(pair, tuple(rows), tuple(flags))


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _roots_json(b: Optional[FactoredB]):
    if b is None:
        return []
    return [{"root": f"{r.numerator}/{r.denominator}", "mult": m} for r, m in b.sorted_roots()]


def to_json_obj(report: CurveReport) -> dict:
    rows = []
    for row in report.rows:
        ratio = row.ratio
        rows.append({
            "r": row.r,
            "f": str(row.f),
            "characteristic": str(row.characteristic),
            "tau": row.tau,
            "mu": row.mu,
            "b_local": {"roots": _roots_json(row.b_local), "skipped": row.b_local is None},
            "ratio": {"gained": _roots_json(ratio.gained if ratio else None),
                      "lost": _roots_json(ratio.lost if ratio else None)},
        })
    return {"pair": {"p": report.pair.p, "q": report.pair.q}, "rows": rows, "flags": list(report.flags)}


def _parse_char(text: str) -> PuiseuxCharacteristic:
    head, tail = text.strip("()").split(";")
    p = int(head)
    rs = [int(v) for v in tail.split(",")]
    return characteristic_of(p, rs)


def _roots_from_json(items) -> FactoredB:
    return FactoredB({Fraction(it["root"]): it["mult"] for it in items})


def report_from_json(text) -> CurveReport:
    """Inverse of the json rendering."""
    obj = json.loads(text)
    pair = CoprimePair(obj["pair"]["p"], obj["pair"]["q"])
    rows = []
    for row in obj["rows"]:
        b = None if row["b_local"]["skipped"] else _roots_from_json(row["b_local"]["roots"])
        ratio = None
        if b is not None:
            ratio = BsRatio(_roots_from_json(row["ratio"]["gained"]), _roots_from_json(row["ratio"]["lost"]))
        rows.append(ReportRow(row["r"], MultiPoly.parse(row["f"], ("x", "y")), _parse_char(row["characteristic"]),
                              row["tau"], row["mu"], b, ratio))
    return CurveReport(pair, tuple(rows), tuple(obj["flags"]))


def _ratio_text(row: ReportRow) -> str:
    if row.ratio is None:
        return "skipped"
    if row.ratio.trivial:
        return "b_0(s)"
    return f"b_0(s) * {row.ratio.gained.format()} / {row.ratio.lost.format()}"


def render_text(report: CurveReport) -> str:
    p, q = report.pair
    rows = report.rows
    gaps = ", ".join(str(row.r) for row in rows if row.r is not None)
    out = [f"p={p}, q={q}, G({p},{q}) = {{{gaps}}}"]
    for row in rows:
        out.append(f"f_{row.label} = {row.f}")
    header = ["f"] + [f"f_{row.label}" for row in rows]
    table = [header,
             ["char"] + [str(row.characteristic) for row in rows],
             ["tau(f)"] + [str(row.tau) for row in rows],
             ["mu(f)"] + [str(row.mu) for row in rows]]
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    out.append("")
    for line in table:
        out.append(" | ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    out.append("")
    for row in rows:
        b = "skipped" if row.b_local is None else row.b_local.format()
        out.append(f"b_{row.label}(s) = {b}")
        if row.r is not None:
            out.append(f"b_{row.label}(s) = {_ratio_text(row)}")
    groups = report.tau_groups()
    if groups:
        out.append("")
        for tau, labels in groups:
            out.append("same tau " + str(tau) + ": " + ", ".join(f"f_{l}" for l in labels))
    bgroups = report.b_groups()
    for _, labels in bgroups:
        out.append("same b: " + ", ".join(f"f_{l}" for l in labels))
    if report.flags:
        out.append("")
        out.append("flags:")
        out.extend(f"  - {flag}" for flag in report.flags)
    return "\n".join(out) + "\n"


def _latex_poly(f: MultiPoly) -> str:
    import re

    text = str(f).replace("*", "")
    return re.sub(r"\^(\d{2,})", r"^{\1}", text)


def _latex_sub(label: str) -> str:
    return label if len(label) == 1 else "{" + label + "}"


def render_latex(report: CurveReport) -> str:
    p, q = report.pair
    rows = report.rows
    out = ["\\begin{align*}"]
    lines = [f"f_{_latex_sub(row.label)} &= {_latex_poly(row.f)}" for row in rows]
    out.append(",\n\\\\\n".join(lines) + ".")
    out.append("\\end{align*}")
    cols = "|c|" + "c|" * len(rows)
    out.append("\\[")
    out.append(f"\\begin{{array}}{{{cols}}}")
    out.append("\\hline")
    out.append("f & " + " & ".join(f"f_{_latex_sub(row.label)}" for row in rows))
    out.append("\\\\ \\hline")
    out.append("\\tau(f) & " + " & ".join(str(row.tau) for row in rows))
    out.append("\\\\ \\hline")
    out.append("\\mu(f) & " + " & ".join(str(row.mu) for row in rows))
    out.append("\\\\ \\hline")
    out.append("\\end{array}")
    out.append("\\]")
    blines = []
    for row in rows:
        name = f"b_{_latex_sub(row.label)}(s)"
        if row.b_local is None:
            blines.append(f"{name} &= \\text{{skipped}}")
        elif row.r is None or row.ratio is None:
            blines.append(f"{name} &= {row.b_local.format()}")
        elif row.ratio.trivial:
            blines.append(f"{name} &= b_0(s)")
        else:
            blines.append(f"{name} &= b_0(s)\\frac{{{row.ratio.gained.format()}}}{{{row.ratio.lost.format()}}}")
    out.append("\\begin{align*}")
    out.append(",\n\\\\\n".join(blines) + ".")
    out.append("\\end{align*}")
    for flag in report.flags:
        out.append("% flag: " + flag)
    return "\n".join(out) + "\n"


def render(report: CurveReport, format: str = "text") -> bytes:
    if format == "text":
        return render_text(report).encode()
    if format == "json":
        return (json.dumps(to_json_obj(report), indent=2) + "\n").encode()
    if format == "latex":
        return render_latex(report).encode()
    raise ContractError(f"unknown format {format!r}")
