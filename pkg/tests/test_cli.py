import json
import os
import signal
import socket
import subprocess
import sys
import time

import pytest
import requests


def run_cli(*args, env_extra=None, cwd=None):
    env = dict(os.environ, COLUMNS="100")
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "huella", *args],
                          capture_output=True, text=True, env=env, cwd=cwd,
                          timeout=120)


def test_digits_one_fourteenth():
    result = run_cli("digits", "1/14", "-n", "13")
    assert result.returncode == 0
    assert result.stdout == "0714285714285\npreperiod=1 period=6 (714285)\n"


def test_digits_terminating():
    result = run_cli("digits", "1/8")
    assert result.returncode == 0
    assert result.stdout == "125\nterminating after 3 digits\n"


def test_digits_zero():
    result = run_cli("digits", "0/5")
    assert result.returncode == 0
    assert result.stdout == "\nterminating after 0 digits\n"


def test_digits_irrational_has_no_summary():
    result = run_cli("digits", "pi", "-n", "10")
    assert result.returncode == 0
    assert result.stdout == "1415926535\n"


def test_digits_pad_zeros():
    result = run_cli("digits", "1/8", "-n", "6", "--pad-zeros")
    assert result.stdout.splitlines()[0] == "125000"


def test_digits_include_integer_part():
    result = run_cli("digits", "22/7", "-n", "6", "--include-integer-part")
    assert result.stdout.splitlines()[0] == "3142857"


def test_parse_error_exit_code_2():
    result = run_cli("digits", "1/0")
    assert result.returncode == 2
    assert result.stdout == ""
    assert "position" in result.stderr


def test_budget_exit_code_3():
    result = run_cli("digits", "pi", "-n", "100", "--max-digits", "50")
    assert result.returncode == 3
    assert "50" in result.stderr


def test_budget_env_var():
    result = run_cli("digits", "pi", "-n", "100", env_extra={"HUELLA_MAX_DIGITS": "60"})
    assert result.returncode == 3


def test_walk_writes_files_and_summary(tmp_path):
    out = str(tmp_path / "out")
    result = run_cli("walk", "1/14", "-n", "600", "--map", "lattice",
                     "--format", "svg,json", "-o", out)
    assert result.returncode == 0
    assert result.stdout == "periodic lag=6 drift=(0,0) closed\n"
    svg = (tmp_path / "out" / "1_14.svg").read_text()
    assert svg.count("<polyline") >= 1
    doc = json.loads((tmp_path / "out" / "1_14.json").read_text())
    assert doc["classification"]["lag"] == 6


def test_walk_pi_summary(tmp_path):
    result = run_cli("walk", "pi", "-n", "3000", "--format", "svg",
                     "-o", str(tmp_path))
    assert result.returncode == 0
    assert result.stdout == "no period found (horizon=3000, max_lag=1000)\n"


def test_walk_digit_literal_csv(tmp_path):
    result = run_cli("walk", "digits:05050505", "--map", "decagon",
                     "--format", "csv", "-o", str(tmp_path))
    assert result.returncode == 0
    text = (tmp_path / "digits_05050505.csv").read_bytes().decode()
    rows = text.strip().split("\r\n")
    assert len(rows) == 9 + 1  # header + origin + 8 steps


def test_walk_all_formats(tmp_path):
    result = run_cli("walk", "1/7", "-n", "60", "--map", "lattice",
                     "--format", "svg,csv,json,ggb", "-o", str(tmp_path))
    assert result.returncode == 0
    for suffix in ("svg", "csv", "json", "ggb.txt"):
        assert (tmp_path / f"1_7.{suffix}").exists()


def test_walk_is_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        run_cli("walk", "sqrt(2)", "-n", "400", "--format", "svg,csv,json,ggb",
                "-o", str(out))
    for suffix in ("svg", "csv", "json", "ggb.txt"):
        assert (a / f"sqrt_2.{suffix}").read_bytes() == \
            (b / f"sqrt_2.{suffix}").read_bytes()


def test_walk_custom_map_file(tmp_path):
    map_file = tmp_path / "flat.json"
    map_file.write_text(json.dumps({
        "name": "flat", "mode": "exact", "vectors": [["1", "1"]] * 10}))
    result = run_cli("walk", "pi", "-n", "200", "--map", str(map_file),
                     "--format", "json", "-o", str(tmp_path))
    assert result.returncode == 0
    assert result.stdout == "periodic lag=1 drift=(1,1)\n"


def test_walk_unknown_format(tmp_path):
    result = run_cli("walk", "1/7", "--format", "png", "-o", str(tmp_path))
    assert result.returncode == 2
    assert "png" in result.stderr


def test_walk_io_error_exit_code_4(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    result = run_cli("walk", "1/7", "-n", "60", "-o", str(blocker / "sub"))
    assert result.returncode == 4


def test_compare_two_numbers(tmp_path):
    out = tmp_path / "cmp.svg"
    result = run_cli("compare", "1/14", "1/7", "--map", "lattice", "-n", "120",
                     "-o", str(out))
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "1/14: periodic lag=6 drift=(0,0) closed"
    assert lines[1] == "1/7: periodic lag=6 drift=(0,0) closed"
    svg = out.read_text()
    assert svg.count("<polyline") == 2
    assert svg.count("<text") == 2


def test_compare_rejects_bad_counts(tmp_path):
    assert run_cli("compare", "1/14", "-o", str(tmp_path / "x.svg")).returncode == 2
    assert run_cli("compare", "1/2", "1/3", "1/4", "1/5", "1/6",
                   "-o", str(tmp_path / "y.svg")).returncode == 2


@pytest.mark.parametrize("command,flags", [
    ("digits", ["-n", "--pad-zeros", "--include-integer-part", "--max-digits"]),
    ("walk", ["-n", "--map", "--origin", "--max-lag", "--format", "-o",
              "--width", "--no-banding"]),
    ("compare", ["-n", "--map", "--origin", "-o", "--width"]),
    ("serve", ["--host", "--port", "--max-digits", "--step-budget", "--cors-origin"]),
])
def test_help_lists_flags_with_defaults(command, flags):
    result = run_cli(command, "--help")
    assert result.returncode == 0
    for flag in flags:
        assert flag in result.stdout
    assert "default" in result.stdout
    again = run_cli(command, "--help")
    assert again.stdout == result.stdout


def test_serve_port_busy_exit_code_5():
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        sock.listen(1)
        port = sock.getsockname()[1]
        result = run_cli("serve", "--port", str(port))
        assert result.returncode == 5
        assert "busy" in result.stderr


def test_serve_responds_and_shuts_down_cleanly():
    env = dict(os.environ, COLUMNS="100")
    proc = subprocess.Popen(
        [sys.executable, "-m", "huella", "serve", "--port", "0",
         "--max-digits", "200000"],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE, text=True, env=env)
    try:
        line = proc.stdout.readline()
        assert line.startswith("serving on http://")
        base = line.split()[2]
        deadline = time.time() + 10
        while True:
            try:
                doc = requests.get(base + "/api/health", timeout=2).json()
                break
            except requests.ConnectionError:
                assert time.time() < deadline
                time.sleep(0.05)
        assert doc["status"] == "ok"
        assert doc["max_digits"] == 200000
        r = requests.post(base + "/api/walk",
                          json={"number": "1/14", "n": 60, "map": "lattice"})
        assert r.status_code == 200
    finally:
        proc.send_signal(signal.SIGINT)
        assert proc.wait(timeout=15) == 0
