from __future__ import annotations

import json

import pytest

from soliton_lab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_catalog_json(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "R3.g_R", "--params", "eta3=2", "--out", "json")
    assert code == 0
    d = json.loads(out)
    assert d["soliton"]["c"] == "6"


def test_analyze_plane_wave(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "PW.d", "--params", "k1=1,k2=0", "--out", "json")
    d = json.loads(out)
    assert code == 0 and d["soliton"]["exists"] is False and d["wave"]["kind"] == "plane_wave"


def test_analyze_table(capsys):
    code, out, _ = run(capsys, "analyze", "--catalog", "R3.L.Ib.ii")
    assert code == 0 and "soliton" in out


def test_jacobi_failure_exit_2(tmp_path, capsys):
    bad = {"dim": 3, "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
           "brackets": [{"i": 1, "j": 2, "k": 3, "v": 1}, {"i": 1, "j": 3, "k": 3, "v": 1},
                        {"i": 2, "j": 3, "k": 1, "v": 1}]}
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    code, _, err = run(capsys, "analyze", str(p))
    assert code == 2 and "Jacobi identity fails at (i,j,k,l)=" in err


def test_input_errors_exit_2(tmp_path, capsys):
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == 2
    code, _, err = run(capsys, "analyze", "--catalog", "R3.g_R.ii", "--params", "eta3=1")
    assert code == 2 and "eta3" in err
    assert run(capsys, "analyze", "--catalog", "Nope")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_report_roundtrip(tmp_path, capsys):
    _, out, _ = run(capsys, "analyze", "--catalog", "H3.L.II", "--out", "json")
    p = tmp_path / "rep.json"
    p.write_text(out)
    _, again, _ = run(capsys, "analyze", str(p), "--out", "json")
    first, second = json.loads(out), json.loads(again)
    first.pop("catalog", None)
    assert first == second


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "--family", "H3xR.KT")
    assert code == 0 and "6/6" in out


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "R3.L.Ib.i", "--grid", "eta=-2:2:5,delta=-1:1:3", "--no-probe", "--out", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0].startswith("eta,delta,exists,c,tau,t,kind")
    assert len(lines) > 5


def test_flow_csv(capsys):
    code, out, err = run(capsys, "flow", "--catalog", "R3.g_R.i", "--T", "0.01", "--h", "0.005", "--c", "3/2",
                         "--out", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("t,tau,g_11") and len(lines) == 4  # header + t = 0, h, 2h


def test_catalog_commands(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "R3.g_R.i" in out
    code, out, _ = run(capsys, "catalog", "get", "R3.g_R.ii", "--params", "eta3=3", "--out", "json")
    d = json.loads(out)
    assert code == 0 and d["id"] == "R3.g_R.ii" and d["algebra"]["dim"] == 4
    assert d["expected"]["soliton_c"] == "11"


def test_negative_option_values_parse_without_equals(capsys):
    assert main(["analyze", "--catalog", "R3.g_R.i", "--t", "-3/2", "--out", "json"]) == 0
    assert main(["scan", "R3.L.II.i", "--grid", "eta1=-1:1:3,eta2=1:2:2", "--endpoints", "-1,-1/4", "--out", "json"]) == 0
