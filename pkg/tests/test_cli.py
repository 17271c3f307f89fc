import csv
import io
import json
import subprocess
import sys

import pytest

from treepaths import cli, exactcount
from treepaths.oracle import build_unrooted
from treepaths.treeio import emit_edge_list


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_unrooted_table(capsys):
    code, out, _ = run(capsys, "count", "unrooted", "--m", "2", "--diameter", "3")
    assert code == 0
    assert out == "1: 5\n2: 6\n3: 4\n"


def test_count_rooted_single(capsys):
    code, out, _ = run(capsys, "count", "rooted", "--m", "3", "--depth", "1", "--t", "2")
    assert (code, out) == (0, "3\n")


@pytest.mark.parametrize("argv", [
    ["count", "rooted", "--m", "1", "--depth", "2"],
    ["count", "rooted", "--m", "2", "--depth", "-1"],
    ["count", "unrooted", "--m", "2", "--diameter", "3", "--t", "0"],
    ["count", "rooted", "--m", "2", "--diameter", "3"],
    ["count", "unrooted", "--m", "2", "--depth", "3"],
    ["count", "rooted", "--m", "2", "--depth", "2", "--t", "5", "--source", "theorem"],
    ["count", "rooted", "--m", "x", "--depth", "2"],
    ["count", "sideways", "--m", "2", "--depth", "2"],
    ["verify", "--m-min", "1"],
    ["verify", "--m-min", "3", "--m-max", "2"],
    ["verify", "--max-depth", "-1"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_count_out_of_range_prop_is_zero(capsys):
    code, out, _ = run(capsys, "count", "rooted", "--m", "2", "--depth", "2", "--t", "5")
    assert (code, out) == (0, "0\n")


def test_count_theorem_table_matches_prop(capsys):
    base = ["count", "unrooted", "--m", "4", "--diameter", "9", "--format", "csv"]
    _, prop, _ = run(capsys, *base)
    _, theorem, _ = run(capsys, *base, "--source", "theorem")
    assert prop == theorem
    rows = list(csv.DictReader(io.StringIO(prop)))
    assert [int(r["t"]) for r in rows] == list(range(1, 10))


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "rooted", "--m", "2", "--depth", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"n": 7, "counts": {"1": "6", "2": "7", "3": "4", "4": "4"}}


def test_count_single_csv(capsys):
    _, out, _ = run(capsys, "count", "rooted", "--m", "2", "--depth", "2", "--t", "3", "--format", "csv")
    assert out == "t,count\n3,4\n"


def test_count_empty_table(capsys):
    code, out, _ = run(capsys, "count", "rooted", "--m", "3", "--depth", "0", "--format", "csv")
    assert (code, out) == (0, "t,count\n")


def test_verify_small_grid(capsys):
    code, out, err = run(capsys, "verify", "--m-min", "2", "--m-max", "3", "--max-diameter", "8",
                         "--max-depth", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2 * (5 + 9)
    assert all(line.startswith("OK ") for line in lines)
    assert lines[0].startswith("OK rooted m=2 r=0")
    assert "checks passed" in err


def test_verify_respects_budget(capsys):
    code, out, _ = run(capsys, "verify", "--m-min", "2", "--m-max", "2", "--max-depth", "6",
                       "--max-diameter", "0", "--budget", "40")
    assert code == 0
    assert [line.split()[3] for line in out.splitlines()] == ["r=0", "r=1", "r=2", "r=3", "r=4", "D=0"]


def test_verify_detects_corrupted_formula(capsys, monkeypatch):
    real = exactcount.rooted_count_prop

    def off_by_one(shape, t):
        value = real(shape, t)
        return value + 1 if t == 2 and shape.r >= 2 else value

    monkeypatch.setattr(exactcount, "rooted_count_prop", off_by_one)
    code, out, err = run(capsys, "verify", "--m-min", "2", "--m-max", "3", "--max-depth", "3",
                         "--max-diameter", "4")
    assert code == 1
    assert "FAIL rooted m=2 r=2" in out
    reported = [line for line in err.splitlines() if line.startswith("  ")]
    assert 1 <= len(reported) <= 10
    assert "t=2 prop: formula=8 oracle=7" in err


def test_histogram_perfect_binary(tmp_path, capsys):
    path = tmp_path / "tree.txt"
    path.write_text(emit_edge_list(build_unrooted(2, 3)))
    code, out, _ = run(capsys, "histogram", "--input", str(path))
    assert code == 0
    assert out.startswith("1: 5\n2: 6\n3: 4\n")
    assert "perfect unrooted m=2 D=3" in out
    assert "degree formulas t=1..3: 5 6 4 (match)" in out


def test_histogram_csv_is_clean(tmp_path, capsys):
    path = tmp_path / "path.txt"
    path.write_text("0 1\n1 2\n")
    code, out, err = run(capsys, "histogram", "--input", str(path), "--format", "csv")
    assert code == 0
    assert out == "t,count\n1,2\n2,1\n"
    assert "degree formulas" in err


def test_histogram_json(tmp_path, capsys):
    path = tmp_path / "t.txt"
    path.write_text(emit_edge_list(build_unrooted(3, 2)))
    code, out, _ = run(capsys, "histogram", "--input", str(path), "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["counts"] == {"1": "4", "2": "6"}
    assert payload["degree_formulas"] == {"1": "4", "2": "6", "3": "0"}
    assert payload["classification"].startswith("perfect unrooted m=3 D=2")


def test_histogram_stdin(monkeypatch, capsys):
    monkeypatch.setattr(sys, "stdin", io.StringIO("a b\nb c\nc d\n"))
    code, out, _ = run(capsys, "histogram", "--input", "-", "--format", "csv")
    assert (code, out) == (0, "t,count\n1,3\n2,2\n3,1\n")


def test_histogram_parse_failures_exit_3(tmp_path, capsys):
    path = tmp_path / "cyc.txt"
    path.write_text("0 1\n1 2\n2 0\n")
    code, out, err = run(capsys, "histogram", "--input", str(path))
    assert code == 3 and out == ""
    assert "line 3" in err and "cycle" in err
    code, _, err = run(capsys, "histogram", "--input", str(tmp_path / "missing.txt"))
    assert code == 3 and "cannot read" in err


def test_identical_invocations_identical_output(capsys):
    argv = ["count", "unrooted", "--m", "7", "--diameter", "25", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "treepaths", "count", "unrooted", "--m", "2", "--diameter", "3",
         "--format", "csv"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "t,count\n1,5\n2,6\n3,4\n"
    bad = subprocess.run([sys.executable, "-m", "treepaths", "count", "rooted", "--m", "1",
                          "--depth", "2"], capture_output=True, text=True, check=False)
    assert bad.returncode == 2 and bad.stdout == ""
