"""Command-line entry points and exit codes."""

import io
import json

import pytest

from sqtkit.catalog import catalog, catalog_modules, negative_control
from sqtkit.cli import main


def run(argv, capsys, monkeypatch, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def rminus_file(tmp_path):
    p = tmp_path / "rminus.json"
    p.write_text(catalog("kC2-Rminus").to_json())
    return str(p)


def test_catalog_pipe_check_all(capsys, monkeypatch):
    code, text, _ = run(["catalog", "kC2-Rminus"], capsys, monkeypatch)
    assert code == 0
    code, out, _ = run(["check", "all", "-"], capsys, monkeypatch, stdin=text)
    assert code == 0
    assert "0 failed" in out


def test_check_sqt_negative_control_exit_1_with_witness(capsys, monkeypatch):
    text = negative_control("bad-R-g1").to_json()
    code, out, _ = run(["check", "sqt", "-"], capsys, monkeypatch, stdin=text)
    assert code == 1
    assert "condition (2)" in out and "witness" in out


def test_check_json_format(capsys, monkeypatch, rminus_file):
    code, out, _ = run(["check", "hopf", rminus_file, "--format", "json"], capsys, monkeypatch)
    assert code == 0
    d = json.loads(out)
    assert d["passed"] and d["counts"]["fail"] == 0


def test_double_table_s3(capsys, monkeypatch):
    code, out, _ = run(["double-table", "S3"], capsys, monkeypatch)
    assert code == 0
    assert "matching orientation: x' = y⁻¹xy" in out
    assert "x' = y⁻¹xy: 0 mismatched cells" in out


def test_drinfeld_prints_u(capsys, monkeypatch, rminus_file):
    code, out, _ = run(["drinfeld", rminus_file], capsys, monkeypatch)
    assert code == 0
    assert out.splitlines()[0] == "u   = g"


def test_center(capsys, monkeypatch, tmp_path):
    p = tmp_path / "s3.json"
    p.write_text(catalog("kS3-triv").to_json())
    code, out, _ = run(["center", str(p), "--format", "json"], capsys, monkeypatch)
    assert code == 0 and json.loads(out)["dim"] == 3


def test_double_then_check_sqt(capsys, monkeypatch, rminus_file, tmp_path):
    out_file = str(tmp_path / "d.json")
    code, _, _ = run(["double", rminus_file, "-o", out_file], capsys, monkeypatch)
    assert code == 0
    code, out, _ = run(["check", "sqt", out_file], capsys, monkeypatch)
    assert code == 0 and "quasitriangular" in out


def test_double_of_s3_triv_fails(capsys, monkeypatch, tmp_path):
    p = tmp_path / "s3.json"
    p.write_text(catalog("kS3-triv").to_json())
    code, out, err = run(["double", str(p), "-o", str(tmp_path / "x.json")], capsys, monkeypatch)
    assert code == 1 and "condition (2)" in err


def test_module_and_braiding_check(capsys, monkeypatch, rminus_file, tmp_path):
    paths = []
    for key, ms in catalog_modules("kC2-Rminus").items():
        p = tmp_path / f"{key}.json"
        p.write_text(ms.to_json())
        paths.append(str(p))
    code, _, _ = run(["module-check", rminus_file, paths[0]], capsys, monkeypatch)
    assert code == 0
    code, out, _ = run(["braiding-check", rminus_file, *paths], capsys, monkeypatch)
    assert code == 0 and "hexagon" in out


@pytest.mark.parametrize("argv", [
    ["catalog", "nope"],
    ["check", "all", "/nonexistent.json"],
    ["double-table", "A5"],
    ["frobnicate"],
    ["check", "sometimes", "x"],
])
def test_usage_errors_exit_2(argv, capsys, monkeypatch):
    code, _, err = run(argv, capsys, monkeypatch)
    assert code == 2 and err


def test_parse_error_exit_2_with_locus(capsys, monkeypatch):
    code, _, err = run(["check", "hopf", "-"], capsys, monkeypatch, stdin='{"field": "QQ"}')
    assert code == 2 and "missing key" in err
