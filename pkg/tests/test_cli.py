import io
import json
import subprocess
import sys

import pytest

from conductor_lab.cli import run
from conductor_lab.nodal import banana, nodal_curve_to_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_semigroup_json():
    code, out, _ = call("semigroup", "4", "6", "9", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["gaps"] == [1, 2, 3, 5, 7, 11]
    assert data["conductor"] == 12
    assert data["symmetric"] is True


def test_descent_golden():
    code, out, _ = call("descent", "--semigroup", "3", "4", "5", "--eta", "-1:1")
    assert code == 0
    assert out == "germ: <3,4,5>\neta: -1:1/1\nconductor_level: pass\ndescent: fail\n"


def test_defect_golden():
    code, out, _ = call("defect", "node", "cusp", "tacnode")
    assert code == 0
    assert out.splitlines()[-3:] == ["total: 0", "codim: 0", "strata: []"]
    code, out, _ = call("defect", "3,4,5", "triple_point", "--format", "json")
    data = json.loads(out)
    assert data["total_defect"] == 2 and data["strata"] == [1, 2]


def test_germ_and_dualizing():
    code, out, _ = call("germ", "tacnode", "--format", "json")
    data = json.loads(out)
    assert (data["delta"], data["conductor"], data["gorenstein"]) == (2, [2, 2], True)
    code, out, _ = call("dualizing", "node", "--format", "json")
    data = json.loads(out)
    assert data["polar_basis"] == ["-1:1/1;-1:-1/1"]
    assert data["cm_type"] == 1
    code, out, _ = call("dualizing", "--semigroup", "3", "4", "5", "--format", "json")
    assert json.loads(out)["generator_exponents"] == [-3, -2]


def test_formulas():
    code, out, _ = call("formulas", "rr", "--genus", "3", "--kind", "bicanonical", "--format", "json")
    assert code == 0 and json.loads(out)["h0"] == 6
    code, out, _ = call("formulas", "rr", "--genus", "2", "--degree", "1", "--format", "json")
    assert json.loads(out)["h0"] == "undetermined"
    code, out, _ = call("formulas", "ribbon", "--genus", "4")
    assert "h1_ideal: 9" in out
    code, out, _ = call("formulas", "quotient", "3", "1", "2", "--format", "json")
    data = json.loads(out)
    assert data["gorenstein"] is False and data["claimed_defect"] == 2


def test_nodal_file(tmp_path):
    path = tmp_path / "curve.json"
    path.write_text(json.dumps(nodal_curve_to_json(banana())))
    code, out, _ = call("nodal", str(path), "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["h0_omega"] == 1 and data["dual_graph"]["cycle_rank"] == 1
    assert data["residue_rank"] == 1
    code, out, _ = call("nodal", str(path), "--select", "0:1", "--format", "json")
    assert json.loads(out)["selection"] == ["0:1"]
    bad = tmp_path / "bad.json"
    bad.write_text('{"components": [], "nodes": []}')
    code, _, err = call("nodal", str(bad))
    assert code == 2 and err.startswith("error[malformed_curve]")
    code, _, err = call("nodal", str(tmp_path / "missing.json"))
    assert code == 1


@pytest.mark.parametrize("argv", [
    ("germ", "bogus"),
    ("germ",),
    ("semigroup",),
    ("semigroup", "x"),
    ("descent", "node", "--eta", "garbage"),
    ("descent", "node", "--eta", "-1:1"),
    ("germ", "cusp", "--truncation", "0"),
    ("frobnicate",),
    ("formulas", "rr", "--genus", "2"),
])
def test_usage_errors(argv):
    code, out, err = call(*argv)
    assert code == 1
    assert err.startswith("usage error: ")
    assert len(err.strip().splitlines()) == 1
    assert "Traceback" not in err


@pytest.mark.parametrize("argv, code_name", [
    (("germ", "tacnode", "--truncation", "2"), "truncation_too_small"),
    (("semigroup", "4", "6"), "not_coprime"),
    (("semigroup", "0"), "non_positive_generator"),
])
def test_engine_errors(argv, code_name):
    code, _, err = call(*argv)
    assert code == 2
    assert err.startswith("error[")
    if code_name:
        assert err.startswith(f"error[{code_name}]")


def test_env_truncation(monkeypatch):
    monkeypatch.setenv("CONDUCTOR_LAB_TRUNCATION", "2")
    assert call("germ", "tacnode")[0] == 2
    monkeypatch.setenv("CONDUCTOR_LAB_TRUNCATION", "40")
    code, out, _ = call("germ", "tacnode", "--format", "json")
    assert code == 0 and json.loads(out)["truncation"] == 40
    # the flag wins over the environment
    code, out, _ = call("germ", "tacnode", "--truncation", "30", "--format", "json")
    assert json.loads(out)["truncation"] == 30


@pytest.mark.parametrize("argv", [
    ("semigroup", "5", "7", "9"),
    ("germ", "triple_point"),
    ("dualizing", "--semigroup", "4", "5", "6"),
    ("defect", "node", "3,4,5"),
    ("formulas", "quotient", "5", "1", "3"),
])
def test_json_round_trip(argv):
    code, out, _ = call(*argv, "--format", "json")
    assert code == 0
    assert json.dumps(json.loads(out), indent=2) + "\n" == out
    assert "." not in "".join(c for c in out if not c.isalpha() and c not in '"<>_-')


def test_catalog_report_table_and_json():
    code, out, _ = call("catalog", "report")
    assert code == 0
    assert out.rstrip().endswith("disagreements")
    code, out, _ = call("catalog", "report", "--format", "json")
    rows = json.loads(out)
    assert all({"entry", "invariant", "computed", "claimed", "citation", "agrees"} <= set(r) for r in rows)


def test_help_exits_zero():
    assert call("--help")[0] == 0


def test_console_module():
    proc = subprocess.run([sys.executable, "-m", "conductor_lab", "semigroup", "2", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "conductor: 2" in proc.stdout
