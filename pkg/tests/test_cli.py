"""End-to-end tests of the CLI client (subprocess, exit codes, artifacts)."""

import json
import subprocess
import sys

BASE = [sys.executable, "-m", "su3spectra"]


def run_cli(*args, cwd=None):
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, cwd=cwd, timeout=600
    )


def test_dim_prints_dimension():
    proc = run_cli("dim", "--weight", "8,8")
    assert proc.returncode == 0
    assert proc.stdout.strip() == "729"


def test_basis_file(tmp_path):
    out = tmp_path / "basis.json"
    proc = run_cli("basis", "--weight", "1,0", "--out", str(out))
    assert proc.returncode == 0
    assert json.loads(out.read_text())[0] == [1, 0, 0, 0, 0, 0]


def test_matrix_stdout_json():
    proc = run_cli("matrix", "--weight", "1,0", "--expr", "1*T3")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["dim"] == 3


def test_matrix_mm_file(tmp_path):
    out = tmp_path / "t3.mtx"
    proc = run_cli("matrix", "--weight", "1,0", "--expr", "1*T3", "--format", "mm",
                   "--out", str(out))
    assert proc.returncode == 0
    assert out.read_text().startswith("%%MatrixMarket")


def test_spectrum_stdout():
    proc = run_cli("spectrum", "--weight", "1,0", "--expr", "1*T3")
    assert proc.returncode == 0
    assert proc.stdout == "-1\n0\n1\n"


def test_ray_study_deterministic(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (out1, out2):
        proc = run_cli("ray-study", "--weight", "1,1", "--expr", "1*T3",
                       "--kmax", "4", "--out", str(out))
        assert proc.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0] == "k,dim,distinct_eigenvalues,distinct_ratio,ks_to_dirac,mass_at_zero,op_norm"
    assert len(lines) == 5


def test_lipkin_artifacts(tmp_path):
    out_dir = tmp_path / "lipkin"
    proc = run_cli("lipkin", "--weight", "2,2", "--a", "1", "--b", "1",
                   "--bins", "0.5", "--out-dir", str(out_dir))
    assert proc.returncode == 0
    for name in ("spectrum.csv", "spacing.csv", "histogram.csv", "sparsity.json"):
        assert (out_dir / name).exists(), name
    report = json.loads((out_dir / "sparsity.json").read_text())
    assert report["dim"] == 27
    assert report["max_nonzeros_per_column"] <= 26
    assert (out_dir / "spectrum.csv").read_text().count("\n") == 27


def test_norm_study(tmp_path):
    out = tmp_path / "norms.csv"
    proc = run_cli("norm-study", "--weight", "1,1", "--expr", "1*T3",
                   "--kmax", "3", "--out", str(out))
    assert proc.returncode == 0
    assert out.read_text().splitlines()[1:] == ["1,8,2", "2,27,4", "3,64,6"]
    assert "slope=2" in proc.stderr


def test_commutativity_study():
    proc = run_cli("commutativity-study", "--weight", "1,1", "--expr1", "1*T3",
                   "--expr2", "1*S12 + 1*S21", "--kmax", "3")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "k,dim,commutator_norm"


def test_rescaling_study():
    proc = run_cli("rescaling-study", "--weight", "1,1",
                   "--expr", "1*T3 + 1*S12^2 + 1*S21^2",
                   "--kmax", "2", "--scalings", "parameter,power:2")
    assert proc.returncode == 0
    header = proc.stdout.splitlines()[0]
    assert "dks_parameter" in header and "dks_power2" in header


def test_config_file_flags_win(tmp_path):
    cfg = tmp_path / "study.cfg"
    cfg.write_text(
        "# ray study defaults\n"
        "weight = 1,1\n"
        "expr = 1*T3\n"
        "kmax = 4\n"
    )
    out = tmp_path / "ray.csv"
    proc = run_cli("--config", str(cfg), "ray-study", "--kmax", "2", "--out", str(out))
    assert proc.returncode == 0
    assert len(out.read_text().splitlines()) == 3  # header + k=1,2 (flag wins)


def test_config_error_exit_code():
    proc = run_cli("ray-study", "--weight", "1,1", "--expr", "1*T3",
                   "--kmax", "3", "--scaling", "bogus")
    assert proc.returncode == 2
    assert "scaling" in proc.stderr
    proc = run_cli("dim", "--weight", "1")
    assert proc.returncode == 2
    proc = run_cli("spectrum", "--weight", "1,0", "--expr", "1*Q9")
    assert proc.returncode == 2


def test_missing_required_option_exit_code():
    proc = run_cli("ray-study", "--weight", "1,1", "--expr", "1*T3")
    assert proc.returncode == 2
    assert "kmax" in proc.stderr


def test_numerical_failure_exit_code():
    proc = run_cli("spectrum", "--weight", "1,0", "--expr", "1*S12 - 1*S21")
    assert proc.returncode == 3
    assert "not real" in proc.stderr


def test_unreachable_server_exit_code():
    proc = run_cli("--server", "http://127.0.0.1:1", "dim", "--weight", "1,0")
    assert proc.returncode == 2
