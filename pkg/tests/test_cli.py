from __future__ import annotations

import json
import subprocess
import sys

import pytest

from sobwidth.cli import main, parse_indices, UsageError


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_spectrum_csv(capsys):
    code, out, _ = run(["spectrum", "--R", "1", "--n", "1:3", "--format", "csv"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,a_n,shell,rank_lo,rank_hi,exact"
    assert lines[1] == "1,1.0,0,1,1,true"
    assert lines[2].startswith("2,0.7071067811865476,")
    assert lines[3].startswith("3,0.7071067811865476,")


def test_limit_spectrum(capsys):
    code, out, _ = run(["limit-spectrum", "--d", "2", "--n", "9"], capsys)
    assert code == 0
    assert out.splitlines()[1] == "9,2,0.5773502691896258,5,9"
    code, out, _ = run(["limit-spectrum", "--d", "2", "--n", "10"], capsys)
    assert out.splitlines()[1] == "10,,0.0,9,"


def test_verify_sandwich(capsys):
    code, out, _ = run(["verify", "--suite", "sandwich", "--seed", "42", "--cases", "100"], capsys)
    assert code == 0
    assert "100/100 pass" in out


@pytest.mark.parametrize("suite", ["oracle", "bracket", "gamma", "quasi-triangle", "limit"])
def test_verify_suites_pass(suite, capsys):
    code, out, _ = run(["verify", "--suite", suite, "--seed", "7", "--cases", "30"], capsys)
    assert code == 0 and "30/30 pass" in out


def test_json_manifest(capsys):
    code, out, _ = run(["complexity", "--limit-space", "--d", "3", "--eps", "0.4", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"manifest", "rows"}
    m = doc["manifest"]
    assert m["command"] == "complexity" and m["output_format"] == "json" and m["tool_version"] == "0.1.0"
    assert doc["rows"] == [{"space": "limit", "d": 3, "eps": 0.4, "n_eps": 27}]


def test_determinism(capsys):
    argv = ["verify", "--suite", "oracle", "--seed", "3", "--cases", "20", "--format", "json"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b
    argv = ["envelope", "--R", "1,2", "--n", "1,50,1000:1004,200000"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_tractability_prints_exact_integers(capsys):
    code, out, _ = run(["tractability", "--limit-space", "--alpha", "2", "--beta", "1", "--d-min", "1000", "--d-max", "1000"], capsys)
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert row[2] == str(3**1000)


def test_tractability_iso_family(capsys):
    code, out, _ = run(["tractability", "--iso", "1", "--eps", "0.2", "--alpha", "1", "--beta", "1", "--d-max", "3"], capsys)
    assert code == 0 and len(out.splitlines()) == 4
    code, _, err = run(["tractability", "--iso", "1", "--alpha", "1", "--beta", "1", "--d-max", "3"], capsys)
    assert code == 1 and "--eps" in err


def test_volume_and_sweep(capsys):
    code, out, _ = run(["volume", "--R", "1,1", "--exp2R", "--log"], capsys)
    assert code == 0 and out.splitlines()[0] == "d,scale,log_volume"
    code, out, _ = run(["volume", "--R", "2,2", "--scale", "4"], capsys)
    assert float(out.splitlines()[1].split(",")[3]) == pytest.approx(12.566370614359172)
    code, out, _ = run(["sweep", "--R", "1,2", "--decades", "4"], capsys)
    assert code == 0 and len(out.splitlines()) == 5


def test_out_file(tmp_path, capsys):
    path = tmp_path / "t.csv"
    code, out, _ = run(["spectrum", "--R", "1,1", "--n", "6", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    assert path.read_text().splitlines()[1].startswith("6,0.5773502691896257,2,6,9,")


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["spectrum", "--R", "1"],
    ["spectrum", "--R", "1", "--n", "0"],
    ["spectrum", "--R", "1,-1", "--n", "2"],
    ["complexity", "--R", "1", "--eps", "2"],
    ["spectrum", "--R", "1", "--n", "3", "--bogus"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1 and err


def test_resource_guard_exit(capsys):
    code, _, err = run(["complexity", "--R", "0.5^6", "--eps", "0.01", "--max-points", "1000"], capsys)
    assert code == 3 and "resource guard" in err


def test_parse_indices():
    assert parse_indices("5") == [5]
    assert parse_indices("1:3") == [1, 2, 3]
    assert parse_indices("1:9:4,20") == [1, 5, 9, 20]
    assert parse_indices("1e3") == [1000]
    for bad in ("3:1", "1.5", "a", "1:2:0"):
        with pytest.raises(UsageError):
            parse_indices(bad)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sobwidth.cli", "limit-spectrum", "--d", "3", "--n", "27"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "27,3,0.5,19,27"
