import json
import subprocess
import sys

import pytest

from harmpoly.cli import main


def run(*args, stdin=""):
    proc = subprocess.run(
        [sys.executable, "-m", "harmpoly.cli", *args],
        input=stdin, capture_output=True, text=True, timeout=300,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_compute_text_on_k3():
    code, out, _ = run("compute", "--input", "-", "--format", "g6", stdin="Bw\n")
    assert code == 0
    assert "H(G,x) = 3x^3" in out
    assert "H = 3/2" in out


def test_compute_json_streams_one_line_per_graph(tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("A_\nBw\nCs\n")
    code, out, _ = run("compute", "--input", str(src), "--report", "json", "--alpha=-1,1/2")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["polynomial_text"] for r in rows] == ["x", "3x^3", "3x^3"]
    assert rows[1]["harmonic_index"] == "3/2"
    assert rows[1]["chi"]["-1"] == "3/4"


def test_compute_edge_list(tmp_path):
    src = tmp_path / "g.txt"
    src.write_text("a b\nb c\nc d\n")
    code, out, _ = run("compute", "--input", str(src), "--format", "edgelist")
    assert code == 0 and "2x^2 + x^3" in out


def test_compute_bad_record_is_input_error():
    code, _, err = run("compute", stdin="A_?\n")
    assert code == 2 and "offset 2" in err


def test_generate_wheel_report():
    code, out, _ = run("generate", "--family", "wheel:6", "--report")
    assert code == 0
    assert "5x^5 + 5x^7: match" in out


def test_generate_tree_without_closed_form():
    code, out, _ = run("generate", "--family", "trtree:5", "--report", "--emit", "edgelist")
    assert code == 0
    assert "not available" in out and "support=[5, 6]: match" in out
    assert out.startswith("n=")


def test_verify_all_small(tmp_path):
    out_json = tmp_path / "r.json"
    code, out, _ = run("verify", "--nmax", "4", "--theorems", "all", "--json", str(out_json))
    assert code == 0
    assert json.loads(out_json.read_text())["fail_count"] == 0


def test_verify_exits_one_on_failure():
    code, out, _ = run("verify", "--nmax", "5", "--theorems", "p3_sub_min")
    assert code == 1
    assert "FAIL p3_sub_min" in out


def test_mine_collisions(tmp_path):
    out_json = tmp_path / "c.json"
    code, out, _ = run("mine-collisions", "--nmax", "4", "--json", str(out_json))
    assert code == 0
    assert json.loads(out_json.read_text())["pairs"][0]["agree"] is True


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["compute", "--bogus"],
    ["verify"],
    ["verify", "--nmax", "3", "--theorems", "nope"],
    ["generate", "--family", "wheel:2"],
    [],
])
def test_usage_errors_exit_two(argv):
    code, _, err = run(*argv)
    assert code == 2
    assert err


def test_enumeration_limit_is_usage_error():
    assert main(["verify", "--nmax", "8"]) == 2


def test_workers_default_from_environment(monkeypatch):
    from harmpoly.cli import build_parser

    monkeypatch.setenv("HP_WORKERS", "3")
    args = build_parser().parse_args(["verify", "--nmax", "2"])
    assert args.workers == 3
