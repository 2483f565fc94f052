import csv
import io
import json
import os
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from negabeta import cli

GOLDEN = Path(__file__).parent / "golden"


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run(
        [sys.executable, "-m", "negabeta", *args], capture_output=True, text=True, env=full_env
    )


def call(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


def schema(name):
    return json.loads(resources.files("negabeta").joinpath(f"schema/{name}").read_text(encoding="utf-8"))


def csv_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


# -- analyze ----------------------------------------------------------------


def test_analyze_312(capsys):
    code, out, _ = call(capsys, "analyze", "312", "--json")
    report = json.loads(out)
    assert code == 0
    assert report["nbar"] == 2
    assert report["polynomial"]["text"] == "b^2 - b - 1"
    assert report["bbar"]["significant"] == "1.61803"
    jsonschema.validate(report, schema("analysis_report.schema.json"))


def test_analyze_345261(capsys):
    code, out, _ = call(capsys, "analyze", "345261", "--json")
    report = json.loads(out)
    assert report["classification"] == {"kind": "cornered", "corner": "2n1", "relation": None}
    assert report["nbar"] == 3 and report["bbar"]["decimal"].startswith("2.000")
    assert report["hat"] == "⋆64521"


def test_analyze_length_one(capsys):
    code, out, _ = call(capsys, "analyze", "1", "--json")
    report = json.loads(out)
    assert code == 0 and report["nbar"] == 2 and report["bbar"]["significant"] == "1"
    assert report["bbar"]["is_one_fallback"] and report["witness"] is None
    jsonschema.validate(report, schema("analysis_report.schema.json"))


@pytest.mark.parametrize("perm", ["15237864", "3651742", "6435721", "21", "564132", "3,1,2"])
def test_analyze_reports_validate(capsys, perm):
    code, out, _ = call(capsys, "analyze", perm, "--json")
    assert code == 0
    jsonschema.validate(json.loads(out), schema("analysis_report.schema.json"))


def test_analyze_text(capsys):
    code, out, _ = call(capsys, "analyze", "15237864")
    assert code == 0
    assert "polynomial: b^4 - 4*b^3 + 3*b^2 - 2*b + 3" in out
    assert "coefficients: 3;-2;3;-4;1" in out
    assert "bbar: 3.15" in out


def test_analyze_json_is_key_sorted(capsys):
    _, out, _ = call(capsys, "analyze", "4321", "--json")
    report = json.loads(out)
    assert out == json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


@pytest.mark.parametrize("bad", ["1231", "0", "", "1,2,x"])
def test_analyze_parse_error_exit_2(capsys, bad):
    code, _, err = call(capsys, "analyze", bad)
    assert code == 2 and err.startswith("error:")


def test_precision_env(capsys, monkeypatch):
    monkeypatch.setenv("NEGABETA_PRECISION", "30")
    _, out, _ = call(capsys, "analyze", "312", "--json")
    assert json.loads(out)["bbar"]["decimal"] == "1.618033988749894848204586834366"
    monkeypatch.setenv("NEGABETA_PRECISION", "abc")
    code, _, _ = call(capsys, "analyze", "312")
    assert code == 2


# -- table -------------------------------------------------------------------


def test_table_len3(capsys):
    code, out, _ = call(capsys, "table", "--len", "3")
    rows = csv_rows(out)
    assert code == 0 and len(rows) == 6
    assert [r["perm"] for r in rows if r["bbar"] != "1"] == ["312"]


def test_table_len4(capsys):
    _, out, _ = call(capsys, "table", "--len", "4")
    rows = csv_rows(out)
    assert len(rows) == 24
    # the reference row lists 13 permutations, but 3412 contains the 312 block
    assert len([r for r in rows if r["bbar"] == "1"]) == 12


def test_table_len5_row(capsys):
    _, out, _ = call(capsys, "table", "--len", "5")
    rows = {r["perm"]: r for r in csv_rows(out)}
    assert len(rows) == 120 and rows["54321"]["bbar"] == "3.23402"


@pytest.mark.parametrize("n", [3, 4])
def test_table_matches_golden(capsys, n):
    _, out, _ = call(capsys, "table", "--len", str(n))
    assert out == (GOLDEN / f"table_len{n}.csv").read_text(encoding="utf-8")


def test_table_sorted_and_columns(capsys):
    _, out, _ = call(capsys, "table", "--len", "5")
    lines = out.splitlines()
    assert lines[0].split(",") == cli.CSV_COLUMNS
    rows = csv_rows(out)
    assert all(len(r) == len(cli.CSV_COLUMNS) for r in rows)
    keys = [(float(r["bbar"]), r["perm"]) for r in rows]
    assert keys == sorted(keys)


def test_table_json_validates(capsys):
    code, out, _ = call(capsys, "table", "--len", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["len"] == 4 and len(doc["rows"]) == 24
    jsonschema.validate(doc, schema("table.schema.json"))


def test_table_out_file(tmp_path, capsys):
    target = tmp_path / "t.csv"
    code, out, _ = call(capsys, "table", "--len", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text(encoding="utf-8") == (GOLDEN / "table_len3.csv").read_text(encoding="utf-8")


def test_table_write_failure_exit_3(tmp_path, capsys):
    code, _, err = call(capsys, "table", "--len", "3", "--out", str(tmp_path / "missing" / "t.csv"))
    assert code == 3 and "cannot write" in err


def test_table_length_bounds(capsys):
    assert call(capsys, "table", "--len", "8")[0] == 2
    assert call(capsys, "table", "--len", "1")[0] == 2


def test_table_deterministic_across_processes():
    first = run("table", "--len", "4", "--format", "json")
    second = run("table", "--len", "4", "--format", "json")
    assert first.returncode == 0 and first.stdout == second.stdout


# -- enumerate / nbar-check / verify / expansion --------------------------------


def test_enumerate_examples(capsys):
    _, out, _ = call(capsys, "enumerate", "--alphabet", "2", "--len", "3")
    assert out.splitlines()[0] == "count: 6"
    _, out, _ = call(capsys, "enumerate", "--beta", "3/2", "--len", "3")
    assert out.splitlines()[0] == "count: 5" and "312" not in out.splitlines()
    _, out, _ = call(capsys, "enumerate", "--alphabet", "2", "--len", "4")
    assert "4321" not in out.splitlines()


def test_enumerate_output_sorted(capsys):
    _, out, _ = call(capsys, "enumerate", "--alphabet", "3", "--len", "4")
    lines = out.splitlines()[1:]
    assert lines == sorted(lines) and len(lines) == int(out.splitlines()[0].split()[1])


def test_enumerate_usage_and_budget(capsys):
    assert call(capsys, "enumerate", "--len", "3")[0] == 2
    assert call(capsys, "enumerate", "--alphabet", "2", "--beta", "2", "--len", "3")[0] == 2
    assert call(capsys, "enumerate", "--beta", "1", "--len", "3")[0] == 2
    code, _, err = call(capsys, "enumerate", "--alphabet", "9", "--len", "9", "--budget", "1000")
    assert code == 4 and "budget" in err


def test_nbar_check(capsys):
    code, out, _ = call(capsys, "nbar-check", "--len", "5")
    assert code == 0 and out.strip().endswith("120/120 agree")


def test_nbar_check_mismatch_exit_5(capsys, monkeypatch):
    monkeypatch.setattr(cli, "nbar", lambda pi: 99)
    code, out, _ = call(capsys, "nbar-check", "--len", "3")
    assert code == 5 and "MISMATCH" in out and "0/6 agree" in out


def test_verify_pass(capsys):
    code, out, _ = call(capsys, "verify", "23654718", "--beta", "17/4", "--m", "4")
    assert code == 0 and "status: pass" in out


def test_verify_failure_exit_6():
    result = run("verify", "312", "--beta", "3/2")
    assert result.returncode == 6
    assert "status: FAIL" in result.stdout and "warning" in result.stderr


def test_expansion(capsys):
    code, out, _ = call(capsys, "expansion", "--beta", "3/2", "--depth", "6")
    assert code == 0 and out == "100001\n"
    assert call(capsys, "expansion", "--beta", "2", "--depth", "0")[0] == 2


def test_module_entry_point():
    result = run("analyze", "312")
    assert result.returncode == 0 and "nbar: 2" in result.stdout
