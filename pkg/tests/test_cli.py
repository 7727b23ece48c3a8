import json
import subprocess
import sys

from padichyper.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_gamma_command(capsys):
    code, out = run_cli(capsys, "gamma", "--p", "5", "--prec", "2", "--x", "1/2")
    assert code == 0
    assert out.strip() == "5^0 * [18] (mod 5^2)"


def test_eval_g_command(capsys):
    code, out = run_cli(capsys, "eval-g", "--p", "5", "--r", "1", "--prec", "4",
                        "--upper", "0,1/2", "--lower", "1/6,5/6", "--t", "1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "5^0 * [78124] (mod 5^7)"  # congruent to -1 mod 5^7
    assert lines[1] == "guaranteed absolute precision: 7"


def test_eval_g_extension_element_literal(capsys):
    code, out = run_cli(capsys, "eval-g", "--p", "5", "--r", "2", "--prec", "2",
                        "--upper", "0,1/2", "--lower", "1/6,5/6", "--t", "1,2")
    assert code == 0
    assert "(mod 5^" in out


def test_count_command(capsys):
    code, out = run_cli(capsys, "count", "--p", "5", "--d", "3", "--a", "1",
                        "--b", "1", "--shape", "linear", "--predict")
    assert code == 0
    assert "points: 8" in out and "agree mod 5^4: True" in out


def test_gauss_padic_command(capsys):
    code, out = run_cli(capsys, "gauss", "--p", "5", "--mode", "padic", "--a", "2")
    assert code == 0
    assert "a=2: ok" in out


def test_verify_command_writes_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    code, out = run_cli(capsys, "verify", "--suite", "floors", "--p", "5",
                        "--d", "4", "--json", str(path))
    assert code == 0
    assert "passed=2 failed=0" in out
    assert json.loads(path.read_text())["schemaVersion"] == 1


def test_verify_config_error_is_exit_2(capsys):
    code = main(["verify", "--suite", "counts", "--p", "3", "--d", "3"])
    assert code == 2


def test_usage_error_is_exit_2():
    proc = subprocess.run([sys.executable, "-m", "padichyper", "verify"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
