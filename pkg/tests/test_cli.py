import json
import subprocess
import sys

import pytest

from polyfault.cli import main
from polyfault.generative import construct_faultfree


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--rows", "4", "--cols", "12", "--faultfree", "--method", "dp")
    assert code == 0 and json.loads(out)["count"] == "48"
    code, out, _ = run(capsys, "count", "--rows", "3", "--cols", "6", "--faultfree")
    assert json.loads(out)["count"] == "0"
    code, out, _ = run(capsys, "count", "--rows", "4", "--cols", "6", "--method", "enumerate")
    assert json.loads(out)["count"] == "18"
    code, out, _ = run(capsys, "count", "--rows", "8", "--cols", "8", "--domino")
    assert json.loads(out)["count"] == "12988816"


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--family", "5x3t", "--t", "6")
    assert json.loads(out) == {"family": "5x3t", "t": 6, "value": "163968", "kind": "exact"}
    code, out, _ = run(capsys, "series", "--family", "7x6t-lower", "--t", "2")
    assert json.loads(out)["kind"] == "lower_bound"


def test_enumerate_limit(capsys):
    code, out, _ = run(capsys, "enumerate", "--rows", "4", "--cols", "6", "--limit", "5")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    code, out, _ = run(capsys, "enumerate", "--rows", "4", "--cols", "6", "--faultfree")
    assert len(out.splitlines()) == 2


def test_construct_analyze_render(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "--rows", "10", "--cols", "12", "--min-crossing")
    assert code == 0
    path = tmp_path / "t.json"
    path.write_text(out)
    code, out, _ = run(capsys, "analyze", "--input", str(path))
    doc = json.loads(out)
    assert doc["fault_lines"] == [] and doc["h_crossing_number"] <= 2
    code, out, _ = run(capsys, "render", "--input", str(path))
    assert len(set(out) - {"\n"}) == 40
    code, out, _ = run(capsys, "render", "--input", str(path), "--format", "svg")
    assert "<svg" in out
    code, _, _ = run(capsys, "render", "--input", str(path), "--format", "svg", "--output", str(tmp_path / "t.svg"))
    assert (tmp_path / "t.svg").exists()


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--rows", "3"],
        ["construct", "--rows", "5", "--cols", "7"],
        ["series", "--family", "4x3t", "--t", "1"],
        ["count", "--rows", "4", "--cols", "6", "--faultfree", "--domino"],
        ["enumerate", "--rows", "4", "--cols", "6", "--limit", "-1"],
        ["analyze", "--input", "/nonexistent/file.json"],
        ["bogus"],
    ],
)
def test_argument_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in json.loads(err)


def test_invalid_tiling_exits_1(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"rows": 2, "cols": 3, "pieces": [{"r": 1, "c": 1, "missing": "TL"}]}))
    code, _, err = run(capsys, "analyze", "--input", str(path))
    assert code == 1 and json.loads(err)["kind"] == "Gap"


def test_verify_reports_and_exit_code(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "--figures", str(tmp_path / "figs"))
    report = json.loads(out)
    assert report["checks"]
    failed = [c["name"] for c in report["checks"] if c["status"] == "fail"]
    assert code == (1 if failed else 0)
    if failed:
        assert json.loads(err)["failed"] == failed
    assert len(list((tmp_path / "figs").glob("*.svg"))) == 11


def test_deterministic_stdout():
    cmd = [sys.executable, "-m", "polyfault.cli", "construct", "--rows", "9", "--cols", "12"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, text=True, check=True).stdout
    assert a == b == construct_faultfree(9, 12).dumps() + "\n"
