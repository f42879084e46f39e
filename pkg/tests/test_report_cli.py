import json
import time

import pytest
from hypothesis import given, settings, strategies as st

from curvesing.cli import main
from curvesing.fixtures import TJURINA
from curvesing.report import build_report, render, report_from_json, run_budgeted, to_json_obj


def _sleep(seconds):
    time.sleep(seconds)
    return seconds


def _boom():
    raise ValueError("boom")


@pytest.fixture(scope="module")
def report49():
    return build_report((4, 9), "formula")


def test_two_three_formula():
    rep = build_report((2, 3), "formula")
    assert len(rep.rows) == 1
    row = rep.rows[0]
    assert row.r is None and str(row.f) == "y^2 - x^3" and row.tau == 2
    assert row.b_local.format() == "(6s+5)(s+1)(6s+7)"
    text = render(rep, "text").decode()
    assert text.startswith("p=2, q=3, G(2,3) = {}")
    assert "f_0 = y^2 - x^3" in text


def test_five_six_skip():
    rep = build_report((5, 6), "skip")
    assert [row.tau for row in rep.rows] == [20, 18, 18, 18, 20, 19, 20]
    assert all(row.b_local is None for row in rep.rows)
    assert all(row.mu == 20 for row in rep.rows)
    assert ("18", ("7", "8", "9")) in [(str(t), ls) for t, ls in rep.tau_groups()]


def test_rows_and_characteristics(report49):
    assert [row.r for row in report49.rows] == [None, 10, 11, 14, 15, 19, 23]
    assert {str(row.characteristic) for row in report49.rows} == {"(4; 9)"}
    assert [row.tau for row in report49.rows] == [TJURINA[(4, 9)][row.r] for row in report49.rows]
    assert report49.flags == ()


def test_typo_flags():
    texts = " ".join(build_report((5, 6), "skip").flags)
    assert "f_19" in texts and "lacks a y factor" in texts
    assert any("f_16" in f for f in build_report((5, 7), "skip").flags)


def test_only_restricts_rows():
    rep = build_report((4, 9), "skip", only=[14])
    assert [row.r for row in rep.rows] == [None, 14]
    with pytest.raises(ValueError):
        build_report((4, 9), "skip", only=[13])


def test_json_schema(report49):
    obj = json.loads(render(report49, "json"))
    assert set(obj) == {"pair", "rows", "flags"}
    assert obj["pair"] == {"p": 4, "q": 9}
    row = obj["rows"][0]
    assert {"r", "f", "tau", "mu", "b_local", "ratio", "characteristic"} <= set(row)
    assert row["b_local"]["skipped"] is False
    assert row["b_local"]["roots"][0] == {"root": "-13/36", "mult": 1}
    assert obj["rows"][1]["b_local"] == {"roots": [], "skipped": True}


def test_latex(report49):
    tex = render(report49, "latex").decode()
    assert "(36s+13)(36s+17)" in tex
    assert "f_{10} &= y^4 - 2x^5y^2 - 4x^7y - x^9 + x^{10}" in tex


@pytest.mark.parametrize("fmt", ["text", "json", "latex"])
def test_render_is_deterministic(report49, fmt):
    again = build_report((4, 9), "formula")
    assert render(report49, fmt) == render(again, fmt)


@pytest.mark.parametrize("pair,mode", [((4, 9), "formula"), ((5, 6), "skip"), ((5, 7), "formula"), ((2, 3), "skip")])
def test_json_round_trip(pair, mode):
    rep = build_report(pair, mode)
    for fmt in ("text", "json", "latex"):
        out = render(rep, fmt)
        assert render(report_from_json(render(rep, "json")), fmt) == out


def test_render_distinguishes_reports():
    outs = {render(build_report(pair, mode), fmt)
            for pair in [(2, 3), (2, 5), (3, 4)] for mode in ("formula", "skip") for fmt in ("text", "json")}
    assert len(outs) == 12


def test_budget_marks_timeouts():
    res = run_budgeted({"quick": (_sleep, (0,)), "slow": (_sleep, (30,)), "bad": (_boom, ())}, 1.5)
    assert res["quick"] == ("ok", 0)
    assert res["slow"] == ("timeout", None)
    assert res["bad"][0] == "error" and "boom" in res["bad"][1]


def test_report_budget_skips_rows():
    rep = build_report((4, 9), "local", budget=0.5, only=[10])
    assert rep.row(10).b_local is None
    assert any("budget" in f for f in rep.flags)
    # tau and f are never skipped
    assert rep.row(10).tau == 21


def test_local_mode_small_pair():
    rep = build_report((2, 5), "local")
    assert rep.row(None).b_local.format() == "(10s+7)(10s+9)(s+1)(10s+11)(10s+13)"
    assert not any(f.startswith("b_0") for f in rep.flags)


# -- CLI -------------------------------------------------------------------


def test_cli_report_json_stable(capsys):
    assert main(["report", "--p", "4", "--q", "9", "--bs", "skip", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["report", "--p", "4", "--q", "9", "--bs", "skip", "--format", "json"]) == 0
    assert capsys.readouterr().out == first
    assert json.loads(first)["pair"] == {"p": 4, "q": 9}


def test_cli_implicitize(capsys):
    assert main(["implicitize", "--p", "4", "--q", "9", "--r", "10"]) == 0
    assert capsys.readouterr().out == "y^4 - 2*x^5*y^2 - 4*x^7*y - x^9 + x^10\n"


def test_cli_bs_and_tjurina(capsys, tmp_path):
    assert main(["bs", "--poly", "y^2 - x^3"]) == 0
    assert capsys.readouterr().out == "(6s+5)(s+1)(6s+7)\n"
    path = tmp_path / "f.txt"
    path.write_text("x^5 - 3*x^4 + 3*x^3 - x^2\n")
    assert main(["bs", "--poly", str(path), "--local"]) == 0
    assert capsys.readouterr().out == "(2s+1)(s+1)\n"
    assert main(["tjurina", "--poly", "y^4 - x^9"]) == 0
    assert capsys.readouterr().out == "tau = 24\nmu = 24\n"


@pytest.mark.parametrize("argv", [
    ["report", "--p", "4", "--q", "6"],
    ["report", "--p", "4", "--q", "9", "--r", "12"],
    ["report", "--p", "4", "--q", "9", "--jobs", "0"],
    ["bs", "--poly", "x^^2"],
    ["tjurina", "--poly", "x + 1"],
    ["implicitize", "--p", "4", "--q", "9", "--r", "13"],
    ["report", "--p", "4"],
    ["frobnicate"],
])
def test_cli_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().err


def test_cli_internal_error(monkeypatch, capsys):
    import curvesing.cli as cli

    def broken(*a, **k):
        raise RuntimeError("kaput")

    monkeypatch.setattr(cli, "build_report", broken)
    assert main(["report", "--p", "4", "--q", "9"]) == 1
    assert "internal error" in capsys.readouterr().err


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([(2, 3), (2, 5), (2, 7), (3, 4), (3, 5), (4, 5)]), st.sampled_from(["formula", "skip"]))
def test_report_invariants(pair, mode):
    rep = build_report(pair, mode)
    p, q = pair
    assert all(row.mu == (p - 1) * (q - 1) for row in rep.rows)
    assert all(str(row.characteristic) == f"({p}; {q})" for row in rep.rows)
    assert to_json_obj(report_from_json(render(rep, "json"))) == to_json_obj(rep)
