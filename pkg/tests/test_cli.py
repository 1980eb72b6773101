"""End-to-end command-line checks, run through subprocess."""

import json
import subprocess
import sys

import pytest


def run_cli(*args, timeout=240):
    return subprocess.run(
        [sys.executable, "-m", "landaukit", *args],
        capture_output=True, text=True, timeout=timeout)


def test_coeffs_csv_golden():
    out = run_cli("coeffs", "--format", "csv")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "k,alpha_numerator,alpha_denominator"
    assert lines[1] == "1,-1,4"
    assert lines[-1] == "12,-568756771963,281406257233920"
    assert len(lines) == 13


def test_coeffs_json_shape():
    out = run_cli("coeffs", "--K", "3", "--format", "json")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["K"] == 3
    assert data["alpha"][0] == {"k": 1, "numerator": -1, "denominator": 4}


def test_stdout_is_deterministic():
    a = run_cli("coeffs", "--K", "8", "--format", "json")
    b = run_cli("coeffs", "--K", "8", "--format", "json")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode == 0


def test_gn_csv_row():
    out = run_cli("gn", "--n-max", "4", "--format", "csv")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0] == "n,gn_numerator,gn_denominator"
    assert lines[3] == "2,89,64"


def test_output_file_and_sidecar(tmp_path):
    target = tmp_path / "gn.csv"
    out = run_cli("gn", "--n-max", "3", "--format", "csv",
                  "--output", str(target))
    assert out.returncode == 0
    assert out.stdout == ""
    assert target.exists()
    meta = json.loads((tmp_path / "gn.csv.meta.json").read_text())
    assert meta["command"] == "gn"
    assert meta["config"]["n_max"] == "3"
    assert "created_utc" in meta and "version" in meta
    # a second run writes identical payload bytes
    target2 = tmp_path / "gn2.csv"
    run_cli("gn", "--n-max", "3", "--format", "csv", "--output", str(target2))
    assert target.read_bytes() == target2.read_bytes()


def test_no_sidecar_without_output(tmp_path):
    out = run_cli("gn", "--n-max", "2")
    assert out.returncode == 0
    assert not list(tmp_path.iterdir())


def test_table_csv_uses_computed_renderings():
    out = run_cli("table1", "--k-max", "13", "--format", "csv")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[0].startswith("family,k1,")
    rows = {line.split(",")[0]: line.split(",")[1:] for line in lines[1:]}
    assert set(rows) == {"even_gap_ratio", "odd_gap_ratio",
                         "even_to_prev_odd", "even_to_next_odd"}
    assert rows["even_to_prev_odd"][0] == "0.1042"
    assert rows["even_to_prev_odd"][3] == "0.0852"
    assert rows["even_gap_ratio"][0] == "56.305"
    assert rows["odd_gap_ratio"][0] == "21.333"


def test_theorem_small_passes():
    out = run_cli("verify-theorem", "--n-max", "5", "--l-max", "3")
    assert out.returncode == 0
    assert "all proven" in out.stdout


def test_corrupted_coefficient_is_caught():
    out = run_cli("verify-theorem", "--n-max", "3", "--l-max", "1",
                  "--corrupt-coefficient", "1")
    assert out.returncode == 1
    assert "NOT proven" in out.stdout


def test_starved_precision_reports_inconclusive():
    out = run_cli("verify-theorem", "--n-max", "50", "--l-max", "8",
                  "--precision-ceiling", "32")
    assert out.returncode == 2
    assert "Inconclusive" in out.stdout


@pytest.mark.parametrize("args", [
    ("frobnicate",),
    ("verify-bounds", "--n-max", "5", "--pairs", "3:0"),
    ("verify-theorem", "--n-max", "2", "--l-max", "1",
     "--precision-ceiling", "9999999"),
    ("coeffs", "--K", "0"),
])
def test_usage_errors_exit_three(args):
    out = run_cli(*args)
    assert out.returncode == 3
    assert out.stderr.startswith("landaukit:")
    assert out.stdout == ""


def test_section5_reports_reference_mismatch():
    out = run_cli("verify-section5", "--l-max", "2", "--j-span", "8")
    assert out.returncode == 1
    assert "paired-increment-reference" in out.stdout
    assert "NOT proven" in out.stdout
    # the exact combinatorial sweeps themselves pass
    assert "residual-even-sign" in out.stdout


def test_lemma4_reports_envelope_failure():
    out = run_cli("verify-lemma4", "--k-max", "11")
    assert out.returncode == 1
    assert "odd-high" in out.stdout


def test_report_all_json():
    out = run_cli("report-all", "--format", "json", timeout=480)
    assert out.returncode == 1
    data = json.loads(out.stdout)
    assert data["exit_code"] == 1
    assert data["all_proven"] is False
    failing = {c["claim_id"] for c in data["claims"]
               if not c["summary"]["all_proven"]}
    assert failing == {"coefficient-envelope", "paired-increment-reference"}
    assert len(data["claims"]) == 16


def test_help_mentions_env_knobs():
    out = run_cli("--help")
    assert out.returncode == 0
    for name in ("LANDAUKIT_MAX_K", "LANDAUKIT_MAX_N",
                 "LANDAUKIT_MAX_PRECISION"):
        assert name in out.stdout
    sub_help = run_cli("verify-theorem", "--help")
    assert sub_help.returncode == 0
    assert "--corrupt-coefficient" not in sub_help.stdout
