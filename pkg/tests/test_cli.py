import json
import math
from pathlib import Path

import pytest

from timevalue import curves, profiles
from timevalue.cli import main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["pv", "--amount", 110, "--rate", 0.10, "--periods", 1], "100.0000000\n"),
        (["fv", "--amount", 100, "--rate", 0, "--periods", 5], "100.0000000\n"),
        (["fv", "--amount", 100, "--rate", 0.1, "--periods", 0.5], "104.8808848\n"),
        (["npv", "--stream", DATA / "two_flows.csv", "--rate", 0.10], "173.5537190\n"),
        (["npv", "--stream", DATA / "empty.csv", "--rate", 0.10], "0.0000000\n"),
        (["irr", "--stream", DATA / "one_period.csv"], "0.1000000000\n"),
        (["irr", "--stream", DATA / "one_period.json"], "0.1000000000\n"),
        (["irr", "--stream", DATA / "two_period.csv"], "0.1000000000\n"),
        (["weight", "--k", 0.05, "--periods", 2], "1.1025\n"),
        (["probe", "--base", 1, "--k", 0.01, "--threshold", "1e6", "--nmax", 10000], "DIVERGENT N=1389\n"),
        (["probe", "--k", 0], "FINITE 1\n"),
        (["probe", "--k", 0.0001, "--threshold", "1e9", "--nmax", 100], "INCONCLUSIVE value_at_nmax=1.010049662\n"),
        (["select", "probe:1:0.01", "5"], "0\n"),
        (["select", "3", "7", "1"], "1\n"),
    ],
)
def test_command_output(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert (code, out, err) == (0, expected, "")


@pytest.mark.parametrize(
    "argv",
    [
        ["pv", "--amount", 100, "--rate", -1.5, "--periods", 1],
        ["pv", "--amount", "abc", "--rate", 0.1, "--periods", 1],
        ["fv", "--amount", 100, "--rate", 0.1, "--periods", -2],
        ["weight", "--k", -0.1, "--periods", 1],
        ["curve", "--figure", 4, "--range", "5:1:10"],
        ["curve", "--figure", 8],
        ["curve", "--figure", 1, "--param", "nope=1"],
        ["curve", "--spec", '{"type": "mystery"}'],
        ["curve", "--spec", "{not json"],
        ["select", "probe:1"],
    ],
)
def test_usage_and_domain_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        code = main([str(a) for a in argv])
        raise SystemExit(code)
    assert info.value.code == 2
    err = capsys.readouterr().err
    assert err.count("\n") == 1


def test_malformed_stream_reports_line(capsys, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("time,amount\n1,100\n-2,5\n")
    code, out, err = run(capsys, "npv", "--stream", bad, "--rate", 0.1)
    assert code == 2
    assert out == ""
    assert "line 3" in err


def test_irr_no_sign_change_exit_3(capsys, tmp_path):
    s = tmp_path / "s.csv"
    s.write_text("time,amount\n0,100\n1,110\n")
    code, out, err = run(capsys, "irr", "--stream", s)
    assert code == 3
    assert "no sign change in bracket" in err


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "pv.txt"
    code, out, _ = run(capsys, "pv", "--amount", 110, "--rate", 0.1, "--periods", 1, "--out", target)
    assert code == 0 and out == ""
    assert target.read_text() == "100.0000000\n"


def read_curve(capsys, *argv):
    code, out, err = run(capsys, "curve", *argv)
    assert code == 0, err
    return out, curves.CurveTable.from_csv(out)


def test_figure_2_dominance(capsys):
    _, table = read_curve(capsys, "--figure", 2, "--range", "0:50:501")
    assert table.header == ("t", "hyperbolic", "exponential")
    hyp, exp = table.column("hyperbolic"), table.column("exponential")
    assert hyp[0] == exp[0] == 1.0
    assert all(a > b for a, b in zip(hyp, hyp[1:]))
    assert all(a > b for a, b in zip(exp, exp[1:]))
    assert all(h > e for h, e in zip(hyp[1:], exp[1:]))


def test_figure_4_symmetric_about_center(capsys):
    _, table = read_curve(capsys, "--figure", 4)
    ts, ys = table.column("t"), table.column("gaussian")
    assert ys[ts.index(15.0)] == max(ys) == 1.0
    for a, b in zip(ys, reversed(ys)):
        assert a == pytest.approx(b, rel=1e-12)


def test_figure_1_zero_rate_constant(capsys):
    _, table = read_curve(capsys, "--figure", 1, "--range", "0:10:11", "--param", "rate=0")
    assert len(table.rows) == 11
    assert set(table.column("discount")) == {1.0}
    assert set(table.column("compound")) == {1.0}


@pytest.mark.parametrize("figure", range(1, 8))
def test_every_figure_roundtrips(capsys, figure):
    out, table = read_curve(capsys, "--figure", figure)
    assert table.to_csv() == out
    series = curves.figure_series(figure)
    for row in table.rows:
        for name, value in zip(table.header[1:], row[1:]):
            assert value == pytest.approx(series[name](row[0]), rel=1e-9, abs=1e-300)


def test_figure_7_jump_at_shock(capsys):
    _, table = read_curve(capsys, "--figure", 7)
    ts, ys = table.column("t"), table.column("response")
    assert all(y == 0 for t, y in zip(ts, ys) if t < 10)
    assert ys[ts.index(10.0)] == 1.0


def test_figure_5_bimodal(capsys):
    _, table = read_curve(capsys, "--figure", 5)
    ts, ys = table.column("t"), table.column("mixture")
    peaks = [ts[j] for j in range(1, len(ys) - 1) if ys[j - 1] < ys[j] > ys[j + 1]]
    assert peaks == [10.0, 20.0]


def test_spec_curve(capsys):
    spec = json.dumps(
        [
            {"type": "gaussian", "a": 2, "b": 1, "c": 0.5, "name": "g"},
            {"type": "beta", "alpha": 2, "beta": 3},
            {"type": "knowledge_weight", "k": 0.05},
        ]
    )
    _, table = read_curve(capsys, "--spec", spec, "--range", "0:2:21")
    assert table.header == ("t", "g", "beta", "knowledge_weight")
    assert table.column("g")[10] == 2.0
    b = profiles.BetaDensity(2, 3)
    assert table.column("beta")[5] == pytest.approx(b(0.5), rel=1e-12)
    assert table.column("beta")[15] == 0.0
    assert table.column("knowledge_weight")[-1] == pytest.approx(1.05**2, rel=1e-12)


def test_spec_from_file(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text('{"type": "impulse_response", "shock_time": 1, "decay": 0.5}')
    _, table = read_curve(capsys, "--spec", path, "--range", "0:2:3")
    assert table.column("impulse_response") == [0.0, 1.0, math.exp(-0.5)]


def test_svg_output(capsys, tmp_path):
    target = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "curve", "--figure", 3, "--format", "svg", "--out", target)
    text = target.read_text()
    assert code == 0
    assert text.startswith("<svg") and text.count("<polyline") == 2


def test_curve_table_invariants():
    with pytest.raises(ValueError):
        curves.CurveTable(("t", "y"), ((0.0, 1.0), (0.0, 2.0)))
    with pytest.raises(ValueError):
        curves.CurveTable(("t", "y"), ((0.0, math.nan),))
    with pytest.raises(ValueError):
        curves.CurveTable(("t", "y"), ((0.0, 1.0, 2.0),))
