import json
import subprocess
import sys

import numpy as np
import pytest

from covosc import (
    ReducedState,
    density_quadrature,
    density_series,
    entropy,
    interaction_time_ratio,
    purity,
    spacetime_wavefunction,
)
from covosc.cli import main


def run_cli(args):
    return main(list(args))


def test_entropy_scan_csv_round_trip(tmp_path):
    out = tmp_path / "scan.csv"
    code = run_cli(["entropy-scan", "--eta-range=0:2:0.25", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    header = json.loads(lines[0].removeprefix("# "))
    assert header["command"] == "entropy-scan"
    assert header["config"]["eta_range"] == "0:2:0.25"
    assert lines[1] == "eta,entropy,purity,temperature"
    footer = json.loads(lines[-1].removeprefix("# "))["footer"]
    assert footer["max_entropy_series_diff"] <= footer["tol_series"]
    body = lines[2:-1]
    assert len(body) == 9
    # every row reproduces the closed forms exactly (repr round-trips floats)
    for line in body:
        eta, s, p, _temp = (float(cell) for cell in line.split(","))
        assert s == entropy(eta)
        assert p == purity(eta)


def test_density_grid_json_contents(tmp_path):
    out = tmp_path / "grid.json"
    code = run_cli(
        ["density-grid", "--eta", "1.0", "--grid=-1:1:1", "--format", "json",
         "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["columns"] == ["x", "xp", "series", "quadrature", "abs_diff"]
    assert len(doc["rows"]) == 9
    assert doc["footer"]["max_abs_diff"] <= doc["config"]["tol_series"]
    for x, xp, series, quadrature, diff in doc["rows"]:
        assert abs(series - quadrature) == pytest.approx(diff, rel=1e-12, abs=1e-300)


def test_squeeze_sections_and_normalization(tmp_path):
    out = tmp_path / "sq.csv"
    code = run_cli(["squeeze", "--eta", "0.8", "--grid=-1:1:0.5", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    sections = {line.split(",")[0] for line in lines[2:-1]}
    assert sections == {"spacetime", "momentum", "spacetime-ellipse", "momentum-ellipse"}
    footer = json.loads(lines[-1].removeprefix("# "))["footer"]
    assert abs(footer["normalization"] - 1.0) < 1e-8
    # spot-check a spacetime row against the library
    row = next(line for line in lines[2:-1] if line.startswith("spacetime,"))
    _, a, b, amp = row.split(",")
    assert float(amp) == spacetime_wavefunction(0.8, float(a), float(b))


def test_parton_energy_row(tmp_path):
    out = tmp_path / "p.csv"
    code = run_cli(["parton", "--energy", "900", "--out", str(out)])
    assert code == 0
    lines = out.read_text().splitlines()
    energy, eta, ratio, _s = lines[2].split(",")
    assert float(energy) == 900.0
    assert float(eta) == pytest.approx(7.559257065503406, rel=1e-15)
    assert float(ratio) == interaction_time_ratio(float(eta))
    # eta rows leave the energy cell empty
    out2 = tmp_path / "p2.csv"
    assert run_cli(["parton", "--eta", "1.0", "--out", str(out2)]) == 0
    assert out2.read_text().splitlines()[2].startswith(",1.0,")


def test_ten_random_rows_re_derive_from_the_library(tmp_path):
    # every emitted numeric column must be reproducible by library calls
    out = tmp_path / "grid.csv"
    eta = 1.5
    assert run_cli(["density-grid", "--eta", str(eta), "--grid=-2:2:0.5",
                    "--out", str(out)]) == 0
    body = out.read_text().splitlines()[2:-1]
    state = ReducedState.from_eta(eta)
    rng = np.random.default_rng(99)
    for idx in rng.choice(len(body), size=10, replace=False):
        x, xp, series, quadrature, diff = (float(c) for c in body[idx].split(","))
        assert series == density_series(state, x, xp)
        assert quadrature == density_quadrature(eta, x, xp)
        assert diff == abs(series - quadrature)


def test_reruns_are_byte_identical(tmp_path):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    args = ["entropy-scan", "--eta-range=0:3:0.5", "--format", "json"]
    assert run_cli(args + ["--out", str(first)]) == 0
    assert run_cli(args + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_module_entry_point_matches_in_process_run(tmp_path):
    out_a = tmp_path / "sub.csv"
    out_b = tmp_path / "proc.csv"
    args = ["parton", "--eta-range=0:2:1"]
    assert run_cli(args + ["--out", str(out_a)]) == 0
    proc = subprocess.run(
        [sys.executable, "-m", "covosc", *args, "--out", str(out_b)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert out_a.read_bytes() == out_b.read_bytes()


def test_default_output_honors_env_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("COVOSC_OUT_DIR", str(tmp_path))
    assert run_cli(["parton", "--eta", "0.5"]) == 0
    assert (tmp_path / "parton.csv").exists()


def test_usage_errors_exit_one(capsys):
    assert run_cli(["entropy-scan"]) == 1
    assert run_cli(["entropy-scan", "--eta", "1", "--eta-range=0:1:0.5"]) == 1
    assert run_cli(["density-grid", "--eta", "1", "--grid=3:1:0.5"]) == 1
    assert run_cli(["density-grid", "--eta", "1", "--grid=0:1:-0.5"]) == 1
    assert run_cli(["parton", "--eta", "1", "--energy", "900"]) == 1
    assert run_cli(["parton", "--energy", "0.1"]) == 1  # below rest mass
    assert run_cli(["no-such-command"]) == 1
    err = capsys.readouterr().err
    assert "usage error" in err


def test_unattainable_tolerance_exits_two_but_still_writes(tmp_path, capsys):
    out = tmp_path / "strict.csv"
    code = run_cli(
        ["density-grid", "--eta", "2.0", "--grid=-1:1:1",
         "--tol-series", "1e-18", "--out", str(out)]
    )
    assert code == 2
    assert out.exists()  # the file is written before the check fails
    assert "tolerance failure" in capsys.readouterr().err


def test_unwritable_output_exits_three(tmp_path):
    missing = tmp_path / "no" / "such" / "dir" / "x.csv"
    assert run_cli(["parton", "--eta", "1", "--out", str(missing)]) == 3


def test_help_exits_zero(capsys):
    assert run_cli(["--help"]) == 0
    assert "entropy-scan" in capsys.readouterr().out
