"""Command-line interface and run configuration."""

import csv
import io
import json
import subprocess
import sys

import pytest

from rydberg_renyi.cli import main, parse_range
from rydberg_renyi.config import ENV_VAR, RunConfig, build_config, load_config_file
from rydberg_renyi.entropy import Method
from rydberg_renyi.errors import DomainError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    lines = text.splitlines()
    assert lines[0] == "# schema=1"
    return list(csv.DictReader(io.StringIO("\n".join(lines[1:]))))


def test_entropy_ground_state(capsys):
    code, out, _ = run(capsys, "entropy", "--n", "0", "--l", "0", "--dim", "3", "--p", "2", "--quantity", "wp", "--method", "exact")
    assert code == 0
    (row,) = rows(out)
    assert float(row["value"]) == pytest.approx(0.7978846, abs=1e-7)
    assert row["alpha"] == "0.5" and row["beta"] == "-0.5" and row["branch"] == "Bessel" and row["caveat"] == "none"


def test_entropy_d4_diseq_json(capsys):
    code, out, _ = run(
        capsys, "entropy", "--n", "50", "--l", "0", "--dim", "4", "--quantity", "diseq", "--method", "asymptotic", "--format", "json"
    )
    assert code == 0
    rec = json.loads(out)
    assert set(rec) == {"inputs", "derived", "value", "caveat"}
    assert rec["value"] == pytest.approx(0.4053, abs=5e-4)
    assert rec["derived"] == {"alpha": 1.0, "beta": -1.0, "branch": "Bessel"}
    assert rec["caveat"] == "RelativeOneTerm"


def test_json_round_trip(capsys):
    argv = ["entropy", "--n", "12", "--l", "1", "--dim", "3", "--p", "2.5", "--quantity", "renyi", "--format", "json"]
    _, out, _ = run(capsys, *argv)
    rec = json.loads(out)
    inp = rec["inputs"]
    again = [
        "entropy", "--n", str(inp["n"]), "--l", str(inp["l"]), "--dim", str(inp["dim"]), "--p", str(inp["p"]),
        "--lambda", str(inp["lambda"]), "--quantity", inp["quantity"], "--method", inp["method"].lower(), "--format", "json",
    ]  # fmt: skip
    _, out2, _ = run(capsys, *again)
    assert json.loads(out2) == rec


def test_entropy_p_one_rejected(capsys):
    code, _, err = run(capsys, "entropy", "--n", "5", "--l", "0", "--dim", "3", "--p", "1")
    assert code == 2 and "p = 1" in err
    code, out, _ = run(capsys, "entropy", "--n", "5", "--l", "0", "--dim", "3", "--p", "1", "--quantity", "wp")
    assert code == 0 and float(rows(out)[0]["value"]) == pytest.approx(1.0, abs=1e-10)


def test_invalid_flags_exit_two(capsys):
    with pytest.raises(SystemExit) as info:
        main(["entropy", "--n", "x"])
    assert info.value.code == 2
    code, _, _ = run(capsys, "entropy", "--n", "3", "--l", "1", "--dim", "1", "--p", "2")
    assert code == 2


def test_numeric_failure_exit_three(capsys):
    code, _, err = run(capsys, "entropy", "--n", "300", "--l", "0", "--dim", "3", "--p", "1.005", "--method", "asymptotic")
    assert code == 0  # cosine branch needs no integral
    code, _, err = run(capsys, "constants", "--alpha", "0.5", "--beta", "-0.5", "--p", "1.01")
    assert code == 3 and err.startswith("ToleranceError")


def test_sweep_p_monotone(capsys):
    code, out, err = run(capsys, "sweep", "--var", "p", "--range", "0.5:5:0.5", "--n", "50", "--l", "0", "--dim", "2", "--quantity", "power")
    assert code == 0 and "p = 1 skipped" in err
    table = rows(out)
    assert list(table[0]) == ["var", "alpha", "beta", "branch", "value", "caveat"]
    vals = [float(r["value"]) for r in table]
    assert len(vals) == 9 and all(b < a for a, b in zip(vals, vals[1:]))


def test_sweep_dim_argmax(capsys):
    _, out, _ = run(
        capsys, "sweep", "--var", "dim", "--range", "2:30:1", "--n", "50", "--l", "0", "--quantity", "diseq", "--method", "asymptotic", "--jobs", "4"
    )
    table = rows(out)
    assert [float(r["var"]) for r in table] == list(range(2, 31))
    best = max(table, key=lambda r: float(r["value"]))
    assert float(best["var"]) == 12


def test_sweep_n_constant(capsys):
    _, out, _ = run(
        capsys, "sweep", "--var", "n", "--range", "10:100:10", "--l", "0", "--dim", "4", "--p", "2", "--quantity", "diseq", "--method", "asymptotic"
    )
    vals = [float(r["value"]) for r in rows(out)]
    assert len(vals) == 10 and max(vals) - min(vals) <= 1e-12


def test_sweep_is_deterministic(capsys, tmp_path):
    argv = ["sweep", "--var", "l", "--range", "0:6:1", "--n", "20", "--dim", "3", "--p", "2.5", "--quantity", "wp"]
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["--output", str(a), "--jobs", "3"]) == 0
    assert main(argv + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()


def test_sweep_missing_fixed_value(capsys):
    code, _, err = run(capsys, "sweep", "--var", "n", "--range", "1:3:1", "--dim", "3", "--p", "2")
    assert code == 2 and "--l" in err


def test_parse_range():
    assert parse_range("0.5:2:0.5") == [0.5, 1.0, 1.5, 2.0]
    assert parse_range("2:30:1", integer=True)[-1] == 30
    for bad in ("1:2", "3:1:1", "0:1:0"):
        with pytest.raises(Exception):
            parse_range(bad)


@pytest.mark.parametrize("which, check", [("2", "decreasing"), ("3", "increasing"), ("5", "argmax")])
def test_figures(capsys, tmp_path, which, check):
    assert main(["figures", "--which", which, "--out", str(tmp_path)]) == 0
    table = rows((tmp_path / f"figure{which}.csv").read_text())
    vals = [float(r["diseq"]) for r in table]
    if check == "decreasing":
        assert all(b < a for a, b in zip(vals, vals[1:]))
    elif check == "increasing":
        assert all(b > a for a, b in zip(vals, vals[1:]))
    else:
        assert int(table[vals.index(max(vals))]["dim"]) == 12


def test_figures_one_and_four(capsys, tmp_path):
    assert main(["figures", "--which", "1", "--out", str(tmp_path)]) == 0
    table = rows((tmp_path / "figure1.csv").read_text())
    for col in ("power_D2", "power_D4"):
        vals = [float(r[col]) for r in table]
        assert all(b < a for a, b in zip(vals, vals[1:]))
    assert main(["figures", "--which", "4", "--out", str(tmp_path)]) == 0
    assert [int(r["l"]) for r in rows((tmp_path / "figure4.csv").read_text())] == list(range(11))


def test_figures_unknown_id():
    with pytest.raises(SystemExit) as info:
        main(["figures", "--which", "6"])
    assert info.value.code == 2


def test_constants_command(capsys):
    _, out, _ = run(capsys, "constants", "--beta", "0", "--p", "1")
    assert "C = 1\n" in out
    _, out, _ = run(capsys, "constants", "--alpha", "0.5", "--beta", "-0.5", "--p", "2")
    assert "C_B = 0.318309886" in out
    code, out, _ = run(capsys, "constants", "--p", "2")
    assert code == 0 and "requires p > 2" in out


def test_verify_fast(capsys):
    code, out, _ = run(capsys, "verify", "--fast")
    assert code == 0
    assert out.count("PASS") == 9 and "FAIL" not in out


def test_verify_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--only", "12", "--eps", "0.5")
    assert code == 1 and "FAIL" in out


def test_verify_reads_config_file(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("# corrupted zone boundary\neps = 0.5\n")
    env = {ENV_VAR: str(cfg), "PATH": "/usr/bin:/bin:/usr/local/bin"}
    proc = subprocess.run(
        [sys.executable, "-m", "rydberg_renyi", "verify", "--only", "12"], capture_output=True, text=True, env=env
    )
    assert proc.returncode == 1 and "FAIL" in proc.stdout


def test_config_layers(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("rel_tol = 1e-8\nt-max = 10  # narrower edge zone\nmethod = exact\n")
    loaded = load_config_file(cfg)
    assert loaded == {"rel_tol": 1e-8, "t_max": 10.0, "method": Method.EXACT}
    run_cfg = build_config({"t_max": 11.0, "eps": None}, environ={ENV_VAR: str(cfg)})
    assert run_cfg.t_max == 11.0 and run_cfg.rel_tol == 1e-8 and run_cfg.method is Method.EXACT
    assert run_cfg.zones.eps == 0.05 and run_cfg.accuracy.rel_tol == 1e-8


@pytest.mark.parametrize("text", ["bogus = 1\n", "eps = soon\n", "method = fastest\n"])
def test_config_rejects(tmp_path, text):
    cfg = tmp_path / "c.cfg"
    cfg.write_text(text)
    with pytest.raises(DomainError):
        load_config_file(cfg)


def test_config_validates_values():
    with pytest.raises(DomainError):
        RunConfig(eps=7.0)
    with pytest.raises(DomainError):
        RunConfig(format="xml")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rydberg_renyi", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0 and "verify" in proc.stdout
