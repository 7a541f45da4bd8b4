import io
import json
import subprocess
import sys

import pytest

from zblock.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_formula_text():
    assert run("formula", "--grid", "6x11") == (0, "q=1 r=2 branch=tight B=11 bound=11\n")


def test_formula_json_wide():
    code, text = run("formula", "--grid", "3x4", "--json")
    assert code == 0
    assert json.loads(text) == {"m": 3, "n": 4, "q": 1, "r": 3, "branch": "wide", "B": 5, "bound": 5}


def test_verify_pass():
    assert run("verify", "--grid", "2x2", "--white", "(1,1),(2,2)") == (
        0, "blocking=true stalled=true size=2 formula=2\n")


def test_verify_fail():
    code, text = run("verify", "--grid", "2x2", "--white", "(1,1)")
    assert code == 2 and text.startswith("blocking=false")


@pytest.mark.parametrize("argv", [
    ("formula", "--grid", "6by11"),
    ("formula", "--grid", "1x5"),
    ("verify", "--grid", "2x2", "--white", "(3,1)"),
    ("verify", "--grid", "2x2", "--white", "(1,1),(1,1)"),
    ("verify", "--grid", "2x2", "--white", "1,1"),
    ("verify", "--grid", "2x2"),
    ("nonsense",),
    (),
])
def test_invalid_input_exits_one(argv, capsys):
    code, _ = run(*argv)
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_witness_file_round_trip(tmp_path):
    path = tmp_path / "w.json"
    assert run("witness", "--grid", "5x13", "-o", str(path)) == (0, "")
    doc = json.loads(path.read_text())
    assert doc["m"] == 5 and doc["n"] == 13 and doc["white"] == sorted(doc["white"])
    code, text = run("verify", "--grid", "5x13", "--set", str(path))
    assert code == 0 and text.startswith("blocking=true stalled=true")


def test_set_for_other_grid_rejected(tmp_path):
    path = tmp_path / "w.json"
    run("witness", "--grid", "3x4", "-o", str(path))
    assert run("verify", "--grid", "3x5", "--set", str(path))[0] == 1


def test_witness_piped_through_stdin(monkeypatch):
    _, text = run("witness", "--grid", "4x9")
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    assert run("verify", "--grid", "4x9", "--set", "-")[0] == 0


def test_solve_grid_json():
    code, text = run("solve", "--grid", "3x4", "--json")
    doc = json.loads(text)
    assert code == 0 and doc["value"] == 5 and doc["exhausted"] is True


def test_solve_enumerate():
    code, text = run("solve", "--grid", "2x2", "--enumerate", "10", "--json")
    doc = json.loads(text)
    assert sorted(doc["witnesses"]) == [[[1, 1], [2, 2]], [[2, 1], [1, 2]]]
    assert doc["capped"] is False


def test_solve_graph_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("p 4 3\ne 1 2\ne 2 3\ne 3 4\n")
    code, text = run("solve", "--graph", str(path))
    assert code == 0 and text.startswith("B=3 F=1")


def test_solve_bad_graph(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("p 2 1\ne 1 1\n")
    assert run("solve", "--graph", str(path))[0] == 1


def test_solve_budget_exhausted():
    code, _ = run("solve", "--grid", "4x7", "--budget-subsets", "5")
    assert code == 3


def test_certify_pass_and_fail():
    code, text = run("certify", "--grid", "3x4", "--white", "(1,1),(2,2),(3,1),(3,3),(4,2)")
    assert code == 0 and text.endswith("certificate pass\n")
    code, text = run("certify", "--grid", "3x3", "--white", "(1,1)", "--side", "xy", "--json")
    doc = json.loads(text)
    assert code == 2 and doc["pass"] is False
    assert any(c["check"] == "lemma2" and c["counterexamples"] == [[1, 1]] for c in doc["checks"])


def test_trace_default_and_seeded():
    code, text = run("trace", "--grid", "2x3", "--white", "(1,1)")
    assert code == 0 and json.loads(text) == [[[2, 1], [1, 1]]]
    _, a = run("trace", "--grid", "3x3", "--white", "(1,1),(2,2)", "--order", "5")
    _, b = run("trace", "--grid", "3x3", "--white", "(1,1),(2,2)", "--order", "5")
    assert a == b and len(json.loads(a)) == 2


def test_table_with_solver_check():
    code, text = run("table", "--m-range", "2..4", "--n-range", "2..7", "--check-solver", "28")
    lines = text.splitlines()
    assert code == 0 and lines[0] == "m\tn\tq\tr\tB\tbound\tsolver"
    rows = [ln.split("\t") for ln in lines[1:]]
    assert all(r[4] == r[6] for r in rows)
    assert ["2", "5", "1", "0", "4", "4", "4"] in rows


def test_table_json_without_solver():
    code, text = run("table", "--m-range", "6..6", "--n-range", "11..11", "--json")
    assert code == 0 and json.loads(text) == [
        {"m": 6, "n": 11, "q": 1, "r": 2, "B": 11, "bound": 11}]


def test_render_ascii_and_svg(tmp_path):
    svg = tmp_path / "g.svg"
    code, text = run("render", "--grid", "2x4", "--white", "(1,1),(2,2),(3,1),(4,2)",
                     "--svg", str(svg), "--certify-overlay")
    assert code == 0 and text == ".W.W\nW.W.\n"
    body = svg.read_text()
    assert body.startswith("<svg") and body.count("<polyline") == 4


def test_output_is_deterministic():
    args = ("solve", "--grid", "3x5", "--enumerate", "50")
    assert run(*args) == run(*args)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zblock", "formula", "--grid", "2x5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "q=1 r=0 branch=tight B=4 bound=4\n"
