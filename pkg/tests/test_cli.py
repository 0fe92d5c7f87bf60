import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from arccover.cli import main

GOLDEN_DIR = Path(__file__).parent / "golden"

# Output schema stability: these exact invocations are frozen as golden
# files; any schema change must regenerate them deliberately
# (tests/refresh_goldens.py).  Configs that would echo machine-specific
# state (paths, core counts) pin it explicitly.
GOLDEN_CASES = {
    "integrate.json": ["integrate", "--seq", "harmonic:c=1,cap=0.49", "--eps", "0.25", "--n", "5",
                       "--format", "json"],
    "bound.csv": ["bound", "--seq", "inverse-sqrt:c=1,cap=0.49", "--eps", "0.25", "--n", "20",
                  "--format", "csv"],
    "divergence.json": ["divergence", "--seq", "inverse-sqrt:c=1,cap=0.49", "--eps", "0.25",
                        "--checkpoints", "0,5,25", "--format", "json"],
    "criterion.csv": ["criterion", "--seq", "constant:c=0.5", "--n", "5", "--format", "csv"],
    "inequality_check.csv": ["inequality-check", "--trials", "5", "--seed", "7", "--format", "csv"],
    "simulate.json": ["simulate", "--seq", "harmonic:c=2,cap=0.99", "--n", "50", "--reps", "100",
                      "--seed", "42", "--threads", "1", "--format", "json"],
    "pair_probe.csv": ["pair-probe", "--seq", "harmonic:c=0.2,cap=0.3", "--n", "3", "--t", "0.15",
                       "--reps", "1000", "--seed", "11", "--format", "csv"],
}


def run_cli(argv, capsys) -> str:
    status = main(argv)
    captured = capsys.readouterr()
    assert status == 0, captured.err
    return captured.out


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_output(name, capsys):
    out = run_cli(GOLDEN_CASES[name], capsys)
    expected = (GOLDEN_DIR / name).read_text()
    assert out == expected


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_repeat_runs_byte_identical(name, capsys):
    first = run_cli(GOLDEN_CASES[name], capsys)
    second = run_cli(GOLDEN_CASES[name], capsys)
    assert first == second


def test_out_flag_writes_same_bytes(tmp_path, capsys):
    target = tmp_path / "doc.json"
    stdout_doc = run_cli(GOLDEN_CASES["integrate.json"], capsys)
    status = main(GOLDEN_CASES["integrate.json"] + ["--out", str(target)])
    capsys.readouterr()
    assert status == 0
    on_disk = target.read_text()
    # only the echoed out path differs
    assert on_disk.replace(json.dumps(str(target)), "null") == stdout_doc
    assert json.loads(on_disk)["rows"] == json.loads(stdout_doc)["rows"]


def test_explicit_file_sequence_deterministic(tmp_path, capsys):
    path = tmp_path / "ls.txt"
    path.write_text("0.4\n0.3\n0.1\n")
    argv = ["simulate", "--seq", f"explicit:file={path}", "--n", "3", "--reps", "50",
            "--seed", "42", "--threads", "1"]
    assert run_cli(argv, capsys) == run_cli(argv, capsys)


def test_module_entry_point(tmp_path):
    cmd = [sys.executable, "-m", "arccover"] + GOLDEN_CASES["criterion.csv"]
    a = subprocess.run(cmd, capture_output=True, text=True, cwd=tmp_path)
    b = subprocess.run(cmd, capture_output=True, text=True, cwd=tmp_path)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout == (GOLDEN_DIR / "criterion.csv").read_text()


class TestSchemas:
    def test_integrate_fields(self, capsys):
        doc = json.loads(run_cli(GOLDEN_CASES["integrate.json"], capsys))
        assert list(doc) == ["config", "rows"]
        assert list(doc["rows"][0]) == ["n", "eps", "value", "log_value",
                                        "segment_count", "nodes_per_segment"]
        assert doc["config"]["seed"] is None

    def test_config_echo_has_all_fields(self, capsys):
        doc = json.loads(run_cli(GOLDEN_CASES["simulate.json"], capsys))
        assert list(doc["config"]) == ["command", "seq", "eps", "n", "checkpoints", "reps",
                                       "seed", "t", "trials", "quadrature_cap", "threads",
                                       "format", "out"]
        assert doc["config"]["seed"] == 42

    def test_inequality_csv_header_and_rows(self, capsys):
        out = run_cli(GOLDEN_CASES["inequality_check.csv"], capsys)
        lines = [line for line in out.splitlines() if not line.startswith("#")]
        assert lines[0] == "trial,n,lhs,rhs,margin,holds"
        assert len(lines) == 6
        assert all(line.endswith(",true") for line in lines[1:])

    def test_divergence_absent_cell_is_null(self, capsys):
        argv = ["divergence", "--seq", "inverse-sqrt:c=1,cap=0.49", "--eps", "0.25",
                "--checkpoints", "5,25", "--quadrature-cap", "10"]
        doc = json.loads(run_cli(argv, capsys))
        assert doc["rows"][0]["log_product_integral"] is not None
        assert doc["rows"][1]["log_product_integral"] is None

    def test_float_formatting_is_17g(self, capsys):
        out = run_cli(GOLDEN_CASES["criterion.csv"], capsys)
        row1 = [line for line in out.splitlines() if line.startswith("1,")][0]
        assert row1.split(",")[3] == "%.17g" % 1.6487212707001282


class TestExitCodes:
    def test_domain_error_is_two(self, capsys):
        status = main(["integrate", "--seq", "harmonic:c=1,cap=0.99", "--eps", "0.25", "--n", "5"])
        captured = capsys.readouterr()
        assert status == 2
        assert captured.out == ""
        assert captured.err.startswith("error:")
        assert len(captured.err.strip().splitlines()) == 1
        assert "eps" in captured.err

    def test_missing_seed_is_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["simulate", "--seq", "constant:c=0.5", "--n", "2", "--reps", "5"])
        assert exc.value.code == 2

    def test_unknown_command_is_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["nonsense"])
        assert exc.value.code == 2

    def test_missing_sequence_file_is_two(self, capsys):
        status = main(["simulate", "--seq", "explicit:file=/no/such/file.txt", "--n", "2",
                       "--reps", "5", "--seed", "1"])
        captured = capsys.readouterr()
        assert status == 2
        assert "file" in captured.err

    def test_bad_trials_is_two(self, capsys):
        status = main(["inequality-check", "--trials", "0", "--seed", "1"])
        capsys.readouterr()
        assert status == 2

    def test_environment_seed_not_honored(self, capsys, monkeypatch):
        monkeypatch.setenv("ARCCOVER_SEED", "123")
        with pytest.raises(SystemExit) as exc:
            main(["simulate", "--seq", "constant:c=0.5", "--n", "2", "--reps", "5"])
        assert exc.value.code == 2
