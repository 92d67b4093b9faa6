import csv
import json
import subprocess
import sys

import pytest

import graphs
from twoclub.cli import CSV_COLUMNS, main
from twoclub.graph import emit


@pytest.fixture
def k33_file(tmp_path):
    p = tmp_path / "k33.metis"
    p.write_text(emit(graphs.k33(), "metis"))
    return p


@pytest.fixture
def fig2_file(tmp_path):
    p = tmp_path / "fig2.dimacs"
    p.write_text(emit(graphs.two_top_three_bottom(), "dimacs"))
    return p


def run_json(capsys, *argv):
    code = main(list(argv) + ["--output", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_solve_k33(capsys, k33_file, tmp_path):
    out = tmp_path / "sol.txt"
    code, rec = run_json(capsys, "solve", "--input", str(k33_file), "--model", "connected", "--t", "3",
                         "--solution-out", str(out))
    assert code == 0
    assert rec["size"] == 6 and rec["timed_out"] is False
    assert rec["vertices"] == [1, 2, 3, 4, 5, 6]
    assert {"instance", "model", "t", "time_s", "n", "n_nonisolated", "m", "counters"} <= rec.keys()
    assert out.read_text().split() == ["1", "2", "3", "4", "5", "6"]
    # what solve writes, check accepts
    assert main(["check", "--input", str(k33_file), "--solution", str(out), "--model", "connected", "--t", "3"]) == 0


def test_solve_none(capsys, fig2_file):
    code, rec = run_json(capsys, "solve", "--input", str(fig2_file), "--model", "robust", "--t", "3")
    assert code == 3 and rec["size"] is None


def test_solve_text_output(capsys, k33_file):
    assert main(["solve", "--input", str(k33_file), "--format", "metis", "--model", "robust", "--t", "1"]) == 0
    text = capsys.readouterr().out
    assert "size: 6" in text and "vertices: 1 2 3 4 5 6" in text


def test_solve_timeout_exit_code(capsys, tmp_path):
    p = tmp_path / "big.metis"
    assert main(["gen", "--n", "60", "--a", "0", "--b", "0.3", "--seed", "1", "--out", str(p)]) == 0
    code, rec = run_json(capsys, "solve", "--input", str(p), "--model", "robust", "--t", "2", "--time-limit", "0")
    assert code == 2 and rec["timed_out"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--input", "{k33}", "--model", "robust", "--t", "-1"],
        ["solve", "--input", "{k33}", "--model", "cliquey", "--t", "1"],
        ["solve", "--input", "/nonexistent/file", "--model", "robust", "--t", "1"],
        ["solve", "--input", "{k33}", "--model", "robust"],
        ["ilp", "--input", "{k33}", "--t", "-2"],
        ["gen", "--n", "0", "--a", "0", "--b", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_one(argv, k33_file, capsys):
    argv = [a.replace("{k33}", str(k33_file)) for a in argv]
    assert main(argv) == 1
    assert "error" in capsys.readouterr().err


def test_malformed_graph_exit_one(tmp_path, capsys):
    p = tmp_path / "bad.dimacs"
    p.write_text("p edge 3 1\ne 1 9\n")
    assert main(["solve", "--input", str(p), "--model", "robust", "--t", "1"]) == 1
    assert "line 2" in capsys.readouterr().err


def test_check(k33_file, tmp_path):
    sol = tmp_path / "all.txt"
    sol.write_text("1\n2\n3\n4\n5\n6\n")
    base = ["check", "--input", str(k33_file), "--solution", str(sol), "--model", "connected"]
    assert main(base + ["--t", "3"]) == 0
    assert main(base + ["--t", "4"]) != 0
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert main(["check", "--input", str(k33_file), "--solution", str(empty), "--model", "robust", "--t", "1"]) != 0
    bad = tmp_path / "bad.txt"
    bad.write_text("7\n")
    assert main(["check", "--input", str(k33_file), "--solution", str(bad), "--model", "robust", "--t", "1"]) == 1


def test_gen_formats(tmp_path, capsys):
    assert main(["gen", "--n", "10", "--a", "1", "--b", "1", "--format", "dimacs"]) == 0
    assert capsys.readouterr().out.startswith("p edge 10 45\n")
    out = tmp_path / "g.txt"
    assert main(["gen", "--n", "5", "--a", "0.5", "--b", "0.5", "--seed", "3", "--format", "edges", "--out", str(out)]) == 0
    assert out.exists()


def test_ilp(k33_file, capsys):
    assert main(["ilp", "--input", str(k33_file), "--t", "1"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("\\ maximum 1-hereditary") and text.endswith("End\n")


def test_bench(tmp_path, k33_file):
    (tmp_path / "sub").mkdir()
    suite = tmp_path / "suite.txt"
    suite.write_text(
        "# instance model t\n"
        f"{k33_file.name} robust 1\n"
        f"{k33_file.name} hereditary 2\n"
        f"{k33_file.name} connected 3\n"
        "random:20:0:0.3:1 robust 1\n"
        "missing.metis robust 1\n"
        "k33.metis robust\n"
    )
    out = tmp_path / "out.csv"
    assert main(["bench", "--suite", str(suite), "--out", str(out)]) == 0
    rows = list(csv.DictReader(out.open()))
    assert tuple(rows[0].keys()) == CSV_COLUMNS
    assert [r["size"] for r in rows[:3]] == ["6", "6", "6"]
    assert rows[3]["timed_out"] == "false" and int(rows[3]["size"]) >= 2
    assert rows[4]["size"] == "error" and rows[5]["size"] == "error"


def test_bench_timeout_recorded_at_limit(tmp_path):
    suite = tmp_path / "suite.txt"
    suite.write_text("random:60:0:0.3:1 robust 2\n")
    out = tmp_path / "out.csv"
    assert main(["bench", "--suite", str(suite), "--time-limit", "0", "--out", str(out)]) == 0
    (row,) = csv.DictReader(out.open())
    assert row["timed_out"] == "true" and float(row["time_s"]) == 0.0


def test_module_entry_point(k33_file):
    proc = subprocess.run(
        [sys.executable, "-m", "twoclub", "solve", "--input", str(k33_file), "--model", "robust",
         "--t", "2", "--output", "json"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["size"] is None
