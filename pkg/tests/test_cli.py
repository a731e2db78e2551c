"""Command-line behavior: values, exit codes, determinism of outputs."""

import json
import math
import subprocess
import sys

import pytest

ARC = [sys.executable, "-m", "arcmetric.cli"]


def run(*args, **kw):
    return subprocess.run(ARC + list(args), capture_output=True, text=True,
                          **kw)


def test_arc_length_values():
    out = run("arc-length", "--pants", "2,2,2", "--arc", "a12")
    assert out.returncode == 0
    assert float(out.stdout) == pytest.approx(1.704912832358014, abs=1e-8)
    out = run("arc-length", "--pants", "2,2,2", "--arc", "a33")
    assert float(out.stdout) == pytest.approx(3.612225999682252, abs=1e-8)


def test_missing_arc_is_usage_error():
    out = run("arc-length", "--pants", "2,2,2")
    assert out.returncode == 2


def test_unknown_arc_is_domain_error():
    out = run("arc-length", "--pants", "2,2,2", "--arc", "zz")
    assert out.returncode == 3


def test_unsupported_surface_exit_code():
    out = run("experiment", "dt-sphere", "--surface", "0,0,2")
    assert out.returncode == 4


def test_distance_values_and_asymmetry():
    out = run("distance", "--pants", "--x", "2,2,2", "--y", "4,4,4")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["d_xy"] == pytest.approx(math.log(2), abs=1e-12)
    assert data["d_yx"] == pytest.approx(0.7232990422997444, abs=1e-9)
    assert data["panel_n"] == 0
    out2 = run("distance", "--pants", "--x", "2,2,2", "--y", "2,2,2")
    data2 = json.loads(out2.stdout)
    assert data2["d_xy"] == 0.0 and data2["d_yx"] == 0.0


def test_distance_monotone_in_panel_on_torus():
    values = []
    for n in ("0", "3"):
        out = run("distance", "--torus", "--x", "1.2,0.4,2.2",
                  "--y", "2.0,-0.7,0.9", "--panel-n", n)
        values.append(json.loads(out.stdout)["d_xy"])
    assert values[1] >= values[0] - 1e-15


def test_double_matches_embedding():
    out = run("double", "--torus", "3.0,0.7,2.0")
    data = json.loads(out.stdout)
    assert data["C1"] == {"length": 3.0, "twist": 0.7}
    assert data["B1"] == {"length": 2.0, "twist": 0.0}
    assert data["C1m"] == {"length": 3.0, "twist": -0.7}


def test_curve_length_word_class():
    out = run("curve-length", "--torus", "2,0.7,1.5", "--curve", "w(0,1)")
    assert out.returncode == 0
    assert float(out.stdout) > 0


def test_horofn_interior():
    out = run("horofn", "--pants", "--base", "2,2,2", "--point", "4,4,4",
              "--at", "2,2,2")
    assert out.returncode == 0
    assert float(out.stdout) == pytest.approx(0.0, abs=1e-12)


def test_horofn_boundary():
    mu = json.dumps([{"class_id": "a33", "weight": 1.0}])
    out = run("horofn", "--pants", "--base", "2,2,2", "--mu", mu,
              "--at", "2,2,2")
    assert out.returncode == 0
    assert float(out.stdout) == pytest.approx(0.0, abs=1e-12)


def test_dt_sphere_report():
    out = run("experiment", "dt-sphere", "--surface", "1,0,1")
    data = json.loads(out.stdout)
    assert data["coordinate_dim"] == 3 and data["sphere_dim"] == 2
    assert data["roundtrip_pass"] == data["samples"] == 50


CPRIME = {
    "surface": [0, 0, 3],
    "base_point": {"B1": 1.0, "B2": 1.0, "B3": 2.0},
    "mu": [{"class_id": "a33", "weight": 1.0}],
    "panel_n": 0,
    "grid": {"start": 0.0, "stop": 10.0, "step": 0.5},
    "targets": ["a12"],
}


def test_experiment_inequality_csv(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(CPRIME))
    csv_path = tmp_path / "out.csv"
    out = run("experiment", "inequality", str(cfg), "--csv", str(csv_path),
              "--json", str(tmp_path / "s.json"))
    assert out.returncode == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("t,dev[a12]")
    assert "panel_n=0" in lines[0]
    final = float(lines[-1].split(",")[1])
    assert final == pytest.approx(1.3036446518940543, abs=1e-6)


def test_experiment_csv_byte_identical(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps(CPRIME))
    outputs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        run("experiment", "inequality", str(cfg), "--csv", str(path),
            "--json", str(tmp_path / "sink.json"))
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]


def test_experiment_boundary_limit(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({**CPRIME, "grid": [4.0, 6.0, 8.0]}))
    out = run("experiment", "boundary-limit", str(cfg))
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["final_distance"] <= 1e-3
    assert data["limit_vector"]["B3"] == 1.0
    assert data["panel"]["complexity"] == 0


def test_experiment_horo_converge(tmp_path):
    cfg = dict(CPRIME)
    cfg["grid"] = [6.0, 8.0, 10.0]
    cfg["probes"] = [{"B1": 2.0, "B2": 2.0, "B3": 2.0},
                     {"B1": 1.5, "B2": 2.5, "B3": 3.0}]
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    out = run("experiment", "horo-converge", str(path))
    assert out.returncode == 0
    assert json.loads(out.stdout)["final_deviation"] <= 1e-2


def test_experiment_separate(tmp_path):
    cfg = {
        "surface": [0, 0, 3],
        "base_point": {"B1": 2.0, "B2": 2.0, "B3": 2.0},
        "mu": [{"class_id": "a33", "weight": 1.0}],
        "nu": [{"class_id": "B3", "weight": 1.0}],
        "panel_n": 0,
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    out = run("experiment", "separate", str(path))
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["gap"] >= 1e-3


def test_malformed_config_reports_location(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{ not json }")
    out = run("experiment", "inequality", str(path))
    assert out.returncode == 3
    assert "line" in out.stderr
    path2 = tmp_path / "missing.json"
    path2.write_text(json.dumps({"surface": [0, 0, 3]}))
    out2 = run("experiment", "inequality", str(path2))
    assert out2.returncode == 3
    assert "base_point" in out2.stderr
