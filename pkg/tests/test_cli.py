from __future__ import annotations

import io
import json

import pytest

from sp6lab.cli import render_table, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_packets_json():
    code, text = call("packets", "--lambda", "0,0,0", "--json")
    assert code == 0
    rep = json.loads(text)
    assert rep["mode"] == "exact"
    assert [d["index"] for d in rep["results"]] == list(range(1, 9))
    assert rep["results"][3]["min_ktype"] == [2, 2, -4]


def test_ktypes_line():
    code, text = call("ktypes", "--p", "3", "--q", "3", "--json")
    line = json.loads(text)["results"][0]
    assert line["total_dimension"] == 400
    assert {"hw": [2, 0, -2], "mult": 4} in line["table"]


def test_projector_reports_computed_values():
    code, text = call("projector", "--target", "2,2,-4", "--json")
    res = json.loads(text)["results"]
    assert res["alpha"] == "1/5760" and res["step1"] == "64"


def test_gamma_zero_hodge(tmp_path):
    h = tmp_path / "h.json"
    h.write_text(json.dumps({"h": {}, "h3plus": 0, "h3minus": 0}))
    code, text = call("gamma", "--hodge", str(h), "--at", "99", "--json")
    assert code == 0 and json.loads(text)["results"]["pole_order"] == 0


def test_lfactor(tmp_path):
    f = tmp_path / "s.json"
    f.write_text(json.dumps({"prime": 2, "chi": [{"value": "1", "label": {"m": 1, "r": 0}}] * 4}))
    code, text = call("lfactor", "--satake", str(f), "--s", "3.0", "--cutoff", "1000", "--json")
    rep = json.loads(text)
    assert code == 0 and rep["mode"] == "float"
    assert rep["results"]["primes"][0]["denominator"][1] == "-8"
    assert rep["results"]["partial_l"][0] == pytest.approx((1 - 1 / 8) ** -8)


def test_hwv_check_table_mode():
    code, text = call("hwv-check")
    assert code == 0
    assert "annihilated.e1-e3" in text and "false" not in text


def test_table_carries_same_data():
    _, js = call("packets", "--lambda", "1,0,0", "--json")
    _, tab = call("packets", "--lambda", "1,0,0")
    assert tab.strip() == render_table(json.loads(js))


def test_deterministic_output():
    a = call("ktypes", "--p", "4", "--q", "2", "--json")
    b = call("ktypes", "--p", "4", "--q", "2", "--json")
    assert a == b
    assert "elapsed" not in a[1]
    assert "elapsed" in call("ktypes", "--p", "1", "--q", "0", "--json", "--timing")[1]


def test_usage_errors_exit_2():
    for argv in (["bogus"], ["packets"], ["packets", "--lambda", "1,2"], ["ktypes", "--p", "3"]):
        with pytest.raises(SystemExit) as exc:
            call(*argv)
        assert exc.value.code == 2


def test_computation_errors_exit_1(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, text = call("gamma", "--hodge", str(bad), "--at", "3")
    assert code == 1
    assert json.loads(text)["error"]["type"] == "JSONDecodeError"
    code, text = call("packets", "--lambda", "0,1,0")
    assert code == 1 and "error" in json.loads(text)
    wrong = tmp_path / "w.json"
    wrong.write_text(json.dumps({"prime": 2, "chi": [{"value": "1"}]}))
    code, _ = call("lfactor", "--satake", str(wrong), "--s", "2")
    assert code == 1


def test_figures_written(tmp_path):
    png = tmp_path / "kt.png"
    code, text = call("ktypes", "--json", "--figure", str(png))
    assert code == 0 and png.stat().st_size > 0
    assert len(json.loads(text)["results"]) == 7
    png2 = tmp_path / "bm.png"
    code, text = call("bm-verify", "--N", "4", "--grid", "4", "--levels", "2", "--tol", "1e-2",
                      "--json", "--figure", str(png2))
    assert code == 0 and png2.stat().st_size > 0
    assert json.loads(text)["results"]["decay"]["expected"] == 3
