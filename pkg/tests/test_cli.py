import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from upg import cli
from upg.invariants import VertexBoundError

DATA = Path(__file__).parent / "data"

GOLDEN_Z11_DOT = """graph {
  "1";
  "2";
  "3";
  "4";
  "5";
  "6";
  "7";
  "8";
  "9";
  "10";
  "2" -- "6";
  "3" -- "4";
  "5" -- "9";
  "7" -- "8";
}
"""


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "upg", *args], capture_output=True, text=True
    )


def test_build_dot_golden():
    res = run_cli("build", "--ring", "zmod:11", "--graph", "upg")
    assert res.returncode == 0
    assert res.stdout == GOLDEN_Z11_DOT  # dot is the default format
    assert res.stderr == ""


def test_build_json():
    res = run_cli("build", "--ring", "zmod:16", "--graph", "upg", "--format", "json")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["n"] == 8
    edges = {frozenset((doc["labels"][u], doc["labels"][v])) for u, v in doc["edges"]}
    assert edges == {frozenset(("3", "11")), frozenset(("5", "13"))}


def test_build_bool3_single_vertex():
    res = run_cli("build", "--ring", "bool:3", "--graph", "upg")
    assert res.returncode == 0
    assert res.stdout == 'graph {\n  "(1,1,1)";\n}\n'


def test_analyze_complement_zmod16():
    res = run_cli("analyze", "--ring", "zmod:16", "--graph", "complement")
    assert res.returncode == 0
    lines = dict(
        line.rsplit(None, 1) for line in res.stdout.splitlines()
    )
    assert lines["edge_count"] == "26"
    assert lines["diameter"] == "2"
    assert lines["radius"] == "1"
    assert lines["planar"] == "false"
    assert lines["hamiltonian"] == "true"


def test_analyze_zmod1():
    res = run_cli("analyze", "--ring", "zmod:1", "--format", "json")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["n"] == 1
    assert doc["diameter"] == 0
    assert doc["girth"] == "inf"


def test_analyze_upg_infinite_metrics():
    res = run_cli("analyze", "--ring", "zmod:24", "--graph", "upg", "--format", "json")
    doc = json.loads(res.stdout)
    assert doc["diameter"] == "inf" and doc["radius"] == "inf"
    assert doc["edge_count"] == 0


def test_bad_spec_exit_2():
    for spec in ("zmod:0", "zmod:x", "mystery:1", "gf:6"):
        res = run_cli("build", "--ring", spec)
        assert res.returncode == 2, spec
        assert res.stderr.startswith("error:")
        assert res.stdout == ""


def test_over_cap_exit_2():
    res = run_cli("build", "--ring", "zmod:9999")
    assert res.returncode == 2
    assert "cap" in res.stderr


def test_order_cap_flag():
    res = run_cli("build", "--ring", "zmod:50", "--order-cap", "10")
    assert res.returncode == 2
    res = run_cli("build", "--ring", "zmod:50", "--order-cap", "50")
    assert res.returncode == 0


def test_no_unity_exit_3():
    res = run_cli("build", "--ring", f"table:@{DATA / 'nounity.json'}")
    assert res.returncode == 3
    assert "2Z/4Z" in res.stderr and "unity" in res.stderr
    res = run_cli("analyze", "--ring", f"table:@{DATA / 'nounity.json'}")
    assert res.returncode == 3


def test_table_ring_analyze():
    res = run_cli(
        "analyze", "--ring", f"table:@{DATA / 'table_z4.json'}", "--format", "json"
    )
    assert res.returncode == 0
    assert json.loads(res.stdout)["n"] == 2


def test_verify_fail_exit_1_with_witness():
    res = run_cli("verify", "--claims", "thm-6.4", "--include", "gf:2^2")
    assert res.returncode == 1
    assert "P3" in res.stdout
    assert "fail GF(4)" in res.stdout


def test_verify_pass_exit_0():
    res = run_cli("verify", "--claims", "thm-4.1", "--zmod-max", "30")
    assert res.returncode == 0
    assert "fail 0" in res.stdout


def test_verify_gap_does_not_fail_exit():
    res = run_cli("verify", "--claims", "thm-3.6", "--zmod-max", "105")
    assert res.returncode == 0
    assert "hypothesis_gap Z/105" in res.stdout


def test_verify_unknown_claim_exit_2():
    res = run_cli("verify", "--claims", "thm-1.99")
    assert res.returncode == 2
    assert "unknown claim id" in res.stderr


def test_verify_bad_include_exit_2():
    res = run_cli("verify", "--claims", "thm-4.1", "--include", "zmod:bogus")
    assert res.returncode == 2


def test_verify_multiple_claims_and_includes():
    res = run_cli(
        "verify",
        "--claims", "thm-4.1,thm-5.3",
        "--zmod-max", "10",
        "--include", "zmod:62",
        "--include", "zmod:63,prod:(zmod:5,zmod:5)",
        "--format", "csv",
    )
    assert res.returncode == 0
    rows = res.stdout.splitlines()
    assert rows[0] == "claim_id,ring,outcome,witness"
    rings = {row.split(",")[1] for row in rows[1:]}
    assert {"Z/62", "Z/63", "Z/5 × Z/5"} <= rings
    claims = {row.split(",")[0] for row in rows[1:]}
    assert claims == {"thm-4.1", "thm-5.3"}


def test_verify_json_format():
    res = run_cli("verify", "--claims", "thm-5.7", "--zmod-max", "13", "--format", "json")
    assert res.returncode == 0
    doc = json.loads(res.stdout)
    assert doc["claims"][0]["claim_id"] == "thm-5.7"
    assert doc["summary"]["fail"] == 0


def test_verify_deterministic():
    args = ("verify", "--claims", "thm-5.7,thm-6.2", "--zmod-max", "13")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_survey_zmod_max_2():
    res = run_cli("survey", "--family", "zmod", "--max", "2")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("ring,order,units,isolated,pairs,upg_girth")
    assert lines[1].startswith("Z/1,1,1,1,0,")
    assert lines[2].startswith("Z/2,2,1,1,0,")


def test_survey_bool_all_single_unit():
    res = run_cli("survey", "--family", "bool", "--max", "5")
    assert res.returncode == 0
    rows = res.stdout.splitlines()[1:]
    assert len(rows) == 5
    assert all(row.split(",")[2] == "1" for row in rows)


def test_survey_zmod11_row_values():
    res = run_cli("survey", "--family", "zmod", "--max", "11")
    header = res.stdout.splitlines()[0].split(",")
    row = dict(zip(header, res.stdout.splitlines()[-1].split(",")))
    assert row["ring"] == "Z/11"
    assert row["upg_domination_number"] == "6"
    assert row["comp_clique_number"] == "6"
    assert row["upg_girth"] == "inf"
    assert row["comp_hamiltonian"] == "true"


def test_survey_gf_prime_powers():
    res = run_cli("survey", "--family", "gf", "--max", "9")
    rings = [row.split(",")[0] for row in res.stdout.splitlines()[1:]]
    assert rings == ["GF(2)", "GF(3)", "GF(4)", "GF(5)", "GF(7)", "GF(8)", "GF(9)"]


def test_survey_over_cap_exit_4():
    res = run_cli("survey", "--family", "bool", "--max", "13")
    assert res.returncode == 4
    assert "bound" in res.stderr


def test_survey_deterministic():
    first = run_cli("survey", "--family", "zmod", "--max", "24")
    second = run_cli("survey", "--family", "zmod", "--max", "24")
    assert first.stdout == second.stdout


def test_usage_errors_exit_2():
    assert run_cli().returncode == 2
    assert run_cli("build").returncode == 2  # --ring required
    assert run_cli("build", "--ring", "zmod:5", "--format", "text").returncode == 2
    assert run_cli("survey", "--family", "zmod", "--max", "5", "--format", "json").returncode == 2
    assert run_cli("analyze", "--ring", "zmod:5", "--graph", "both").returncode == 2


def test_out_flag_writes_file(tmp_path):
    target = tmp_path / "graph.dot"
    res = run_cli("build", "--ring", "zmod:11", "--out", str(target))
    assert res.returncode == 0
    assert res.stdout == ""
    assert target.read_text() == GOLDEN_Z11_DOT


def test_console_script_matches_module():
    exe = shutil.which("upg")
    assert exe, "console script not installed"
    via_script = subprocess.run(
        [exe, "build", "--ring", "zmod:11"], capture_output=True, text=True
    )
    assert via_script.stdout == GOLDEN_Z11_DOT


def test_analyze_vertex_bound_exit_4(monkeypatch, capsys):
    def refuse(g, **kw):
        raise VertexBoundError("planarity", g.n, 4)

    monkeypatch.setattr(cli, "full_report", refuse)
    code = cli.main(["analyze", "--ring", "zmod:16"])
    assert code == 4
    err = capsys.readouterr().err
    assert "planarity" in err and "Z/16" in err


def test_main_in_process_smoke(capsys):
    code = cli.main(["verify", "--claims", "thm-6.2", "--zmod-max", "6"])
    assert code == 0
    out = capsys.readouterr().out
    assert "thm-6.2" in out
