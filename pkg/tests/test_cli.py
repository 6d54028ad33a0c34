import csv
import io
import json
import subprocess
import sys

import pytest

from ftbackbone.bench import CSV_COLUMNS
from ftbackbone.cli import main
from ftbackbone.graph import complete_bipartite, complete_graph, cycle_graph
from ftbackbone.instances import write_graph


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in [
        ("k5", complete_graph(5)),
        ("k33", complete_bipartite(3, 3)),
        ("c6", cycle_graph(6)),
        ("c30", cycle_graph(30)),
    ]:
        paths[name] = tmp_path / f"{name}.graph"
        paths[name].write_text(write_graph(g))
    return paths


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


class TestSolve:
    def test_k5(self, capsys, files):
        code, out, _ = run(capsys, "solve", "--input", files["k5"], "--m", 3)
        assert code == 0
        assert out.splitlines()[0] == "1 2 3 4"

    def test_json_and_trace(self, capsys, files, tmp_path):
        trace = tmp_path / "t.jsonl"
        code, out, _ = run(capsys, "solve", "--input", files["k33"], "--m", 3, "--json", "--trace", trace)
        assert code == 0
        assert json.loads(out)["nodes"] == [1, 2, 3, 4, 5, 6]
        rows = [json.loads(line) for line in trace.read_text().splitlines()]
        assert set(rows[0]) == {"chosen_x", "delta_f", "f_after", "num_candidates"}

    def test_oracle_seed_builder(self, capsys, files):
        code, out, _ = run(capsys, "solve", "--input", files["k33"], "--m", 3, "--seed-builder", "oracle")
        assert code == 0 and "seed_builder=oracle" in out

    def test_not_three_connected(self, capsys, files):
        code, _, err = run(capsys, "solve", "--input", files["c6"], "--m", 3)
        assert code == 2 and "input graph is not 3-connected" in err

    def test_small_m(self, capsys, files):
        code, _, err = run(capsys, "solve", "--input", files["k5"], "--m", 2)
        assert code == 2 and "m must be at least 3" in err

    def test_missing_file_and_parse_error(self, capsys, tmp_path):
        code, _, _ = run(capsys, "solve", "--input", tmp_path / "nope", "--m", 3)
        assert code == 2
        bad = tmp_path / "bad.graph"
        bad.write_text("p 3 1\ne 1 1\n")
        code, _, err = run(capsys, "solve", "--input", bad, "--m", 3)
        assert code == 2 and "line 2" in err


class TestVerify:
    def test_exit_codes(self, capsys, files, tmp_path):
        good = tmp_path / "good.txt"
        good.write_text("1\n2\n3\n4\n")
        path = tmp_path / "path.txt"
        path.write_text("1\n2\n3\n")
        stray = tmp_path / "stray.txt"
        stray.write_text("1\n99\n")
        code, out, _ = run(capsys, "verify", "--input", files["k5"], "--set", good, "--k", 3, "--m", 3)
        assert code == 0 and json.loads(out)["is_valid"] is True
        code, out, _ = run(capsys, "verify", "--input", files["c6"], "--set", path, "--k", 2, "--m", 1)
        assert code == 3 and json.loads(out)["is_valid"] is False
        code, _, _ = run(capsys, "verify", "--input", files["k5"], "--set", stray, "--k", 3, "--m", 3)
        assert code == 2


class TestOracle:
    def test_named(self, capsys, files):
        code, out, _ = run(capsys, "oracle", "--input", files["k5"], "--k", 3, "--m", 3)
        assert code == 0 and out.splitlines()[0] == "size 4"
        code, out, _ = run(capsys, "oracle", "--input", files["k33"], "--k", 3, "--m", 3, "--json")
        assert json.loads(out) == {"size": 6, "nodes": [1, 2, 3, 4, 5, 6]}

    def test_too_large(self, capsys, files):
        code, _, err = run(capsys, "oracle", "--input", files["c30"], "--k", 2, "--m", 1)
        assert code == 2 and "22" in err

    def test_env_cap(self, capsys, files, monkeypatch):
        monkeypatch.setenv("BACKBONE_ORACLE_CAP", "5")
        code, _, _ = run(capsys, "oracle", "--input", files["k33"], "--k", 3, "--m", 3)
        assert code == 2


class TestGen:
    def test_udg_k4(self, capsys, tmp_path):
        out = tmp_path / "k4.pts"
        code, _, _ = run(capsys, "gen", "--kind", "udg", "--n", 4, "--seed", 0, "--side", 0.5, "--out", out)
        assert code == 0
        code, text, _ = run(capsys, "solve", "--input", out, "--m", 3)
        assert code == 0 and text.splitlines()[0] == "1 2 3 4"

    def test_rand3(self, capsys, tmp_path):
        out = tmp_path / "r.graph"
        code, _, _ = run(capsys, "gen", "--kind", "rand3", "--n", 12, "--seed", 1, "--p", 0.1, "--out", out)
        assert code == 0 and out.read_text().startswith("p 12 ")

    def test_generation_failure(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "gen", "--kind", "udg", "--n", 6, "--seed", 0, "--radius", 0, "--out", tmp_path / "x"
        )
        assert code == 2 and "attempts" in err


class TestBench:
    def test_ten_rows(self, capsys, tmp_path):
        suite = tmp_path / "suite.txt"
        suite.write_text("".join(f"rand3 n=10 p=0.1 seed={s} m=3\n" for s in range(10)))
        out = tmp_path / "out.csv"
        code, text, _ = run(capsys, "bench", "--suite", suite, "--out", out)
        assert code == 0 and text.startswith("instances=10 max_ratio=NA")
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert len(rows) == 10
        assert list(rows[0]) == CSV_COLUMNS
        assert all(r["opt3"] == "" and float(r["wall_ms"]) >= 0 for r in rows)

    def test_with_oracle(self, capsys, tmp_path):
        suite = tmp_path / "suite.txt"
        suite.write_text(
            "# small instances only\n"
            + "".join(f"rand3 n={8 + s} p=0.15 seed={s} m={3 + s % 2}\n" for s in range(4))
            + "udg n=10 side=1.6 radius=1.0 seed=5000 m=3 id=udg-a\n"
        )
        out = tmp_path / "out.csv"
        code, text, _ = run(capsys, "bench", "--suite", suite, "--out", out, "--with-oracle", "--json")
        assert code == 0 and json.loads(text)["instances"] == "5"
        rows = list(csv.DictReader(io.StringIO(out.read_text())))
        assert rows[-1]["instance_id"] == "udg-a"
        for r in rows:
            assert float(r["empirical_ratio"]) >= 1
            assert int(r["final_size"]) >= int(r["opt3"])
            assert float(r["empirical_ratio"]) <= float(r["gamma_bound"])

    def test_parallel_matches_serial(self, capsys, tmp_path):
        suite = tmp_path / "suite.txt"
        suite.write_text("".join(f"udg n=16 side=2 radius=1 seed={s * 1000} m=4\n" for s in range(6)))
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert run(capsys, "bench", "--suite", suite, "--out", a, "--no-timing")[0] == 0
        assert run(capsys, "bench", "--suite", suite, "--out", b, "--no-timing", "--jobs", 3)[0] == 0
        assert a.read_bytes() == b.read_bytes()

    def test_bad_suite(self, capsys, tmp_path):
        suite = tmp_path / "suite.txt"
        suite.write_text("torus n=5\n")
        assert run(capsys, "bench", "--suite", suite, "--out", tmp_path / "o.csv")[0] == 2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "ftbackbone", "solve", "--input", str(files["c6"]), "--m", "3"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and "not 3-connected" in proc.stderr
