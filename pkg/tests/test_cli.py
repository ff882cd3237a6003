import csv
import io
import json
import math
import subprocess
import sys

import pytest

from gshape.cli import dumps, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv)
    return code, json.loads(out)


def test_decompose():
    code, js = call_json("decompose", "--m", "2i")
    assert code == 0
    assert js == {"f": {"im": 0, "re": 1}, "g": {"im": 1, "re": 1}, "h": {"im": 0, "re": 1},
                  "m": {"im": 2, "re": 0}}


def test_not_fourth_power_free():
    code, js = call_json("decompose", "--m", "-12")
    assert code == 2 and js["error"] == "not_fourth_power_free"


def test_classify_negative_literal():
    code, js = call_json("classify", "--m", "-6i")
    assert code == 0
    assert js["matches"] == [3, 5] and js["primary"] == 3
    assert js["f"] == {"im": 0, "re": -3}


def test_shape():
    code, js = call_json("shape", "--m", "3")
    assert code == 0
    assert js["lambda1"] == 3 and js["lambda2"] == 1
    assert len(js["gram6"]) == 6 and js["normalization"] > 0


def test_basis_and_gram():
    code, js = call_json("basis", "--m", "1+i")
    assert code == 0 and js["case"] == 11 and all(js["integral"])
    code, js = call_json("gram", "--m", "5", "--mode", "both")
    assert code == 0 and js["case"] == 10 and js["consistent"]
    assert js["max_relative_deviation"] < 1e-10
    code, js = call_json("gram", "--m", "3", "--mode", "closed")
    assert code == 0 and js["consistent"] and len(js["gram"]) == 8


def test_case_override_without_match():
    code, js = call_json("gram", "--m", "3", "--case", "11")
    assert code == 0 and js["case"] == 11


def test_count():
    code, js = call_json("count", "--x", "10", "--r1lo", "0.5", "--r2lo", "0.9", "--r2hi", "1.5", "--carefree")
    assert code == 0 and (js["total"], js["carefree"]) == (960, 384)
    code, js = call_json("count", "--x", "10", "--r1lo", "0.5", "--r2lo", "0.9", "--r2hi", "1.5")
    assert js["carefree"] is None


def test_threads_reproduce(monkeypatch):
    base = call("count", "--x", "3000", "--carefree", "--threads", "1")[1]
    assert call("count", "--x", "3000", "--carefree", "--threads", "4")[1] == base
    monkeypatch.setenv("GSHAPE_THREADS", "3")
    assert call("count", "--x", "3000", "--carefree")[1] == base


def test_density_and_sweep():
    code, js = call_json("density", "--x", "1000", "--qmax", "100")
    assert code == 0 and js["euler_truncation"] == 100 and js["g_terms"] == 8
    code, out, _ = call("density-sweep", "--xs", "1e3,2e3", "--qmax", "100")
    assert code == 0 and "\r" not in out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["x", "n", "n_over_x", "theoretical", "rel_err", "residual_x14"]
    assert [r[0] for r in rows[1:]] == ["1000", "2000"]
    assert math.isclose(float(rows[1][2]), int(rows[1][1]) / 1000)


def test_localdensity():
    code, out, _ = call("localdensity", "--qmax", "5")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == ["q", "bruteforce", "formula", "match"]
    assert [ln.split("\t")[0] for ln in lines[1:]] == ["2", "5", "5"]
    assert all(ln.endswith("\ttrue") for ln in lines[1:])
    code, js = call_json("localdensity", "--qmax", "37")
    assert code == 2 and js["error"] == "budget_exceeded"


def test_audit():
    code, js = call_json("audit", "--bound", "200")
    assert code == 0 and js["unmatched"] == []
    w = js["overlap_witness"]
    assert w["integral"] == {"3": True, "5": True} and w["spans_coincide"] is False


@pytest.mark.parametrize("argv", [
    ["decompose"],
    ["decompose", "--m", "1+"],
    ["decompose", "--m", "0"],
    ["count", "--x", "10", "--bogus"],
    ["count", "--x", "10", "--threads", "0"],
    ["count", "--x", "10", "--r1lo", "3"],
    ["density-sweep", "--xs", "1e3,abc"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 1 and out == "" and err


def test_json_format():
    s = dumps({"b": 1 / 3, "a": [math.pi, float("inf")], "c": True})
    assert s == '{"a": [3.14159265359, null], "b": 0.333333333333, "c": true}'


def test_output_is_deterministic():
    a = call("shape", "--m", "-7+4i")[1]
    assert a == call("shape", "--m", "-7+4i")[1]
    assert list(json.loads(a)) == sorted(json.loads(a))


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "gshape", "decompose", "--m", "5"],
                       capture_output=True, text=True, check=False)
    assert p.returncode == 0 and json.loads(p.stdout)["f"] == {"im": 0, "re": 5}
