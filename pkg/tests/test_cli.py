import io
import subprocess
import sys

import pytest

from unipolar.cli import parse_split, run
from unipolar.graph import format_edge_list, parse_edge_list
from unipolar.oracle import gen_named
from unipolar.perfect_code import is_perfect_code
from unipolar.recognition import Variant


def call(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def graph_file(tmp_path):
    def make(name):
        path = tmp_path / f"{name}.txt"
        path.write_text(format_edge_list(gen_named(name)))
        return path
    return make


def test_recognize_p5(graph_file):
    assert call("recognize", graph_file("P5")) == (0, "UNIPOLAR\ncenter: 1 2\nclique 0: 0\nclique 1: 3 4\n")


def test_recognize_c6_and_neither(graph_file):
    code, out = call("recognize", graph_file("C6"))
    assert code == 0 and out.splitlines()[0] == "CO-UNIPOLAR"
    assert call("recognize", graph_file("G_c")) == (1, "NOT-GENERALIZED-SPLIT\n")
    assert call("recognize", graph_file("C5"))[0] == 1


def test_dump_2sat(graph_file, tmp_path):
    dump = tmp_path / "inst.cnf"
    code, _ = call("recognize", graph_file("prism"), "--dump-2sat", dump)
    assert code == 0 and dump.exists()
    for line in dump.read_text().splitlines():
        assert line.startswith(("c ", "p cnf ")) or line.endswith(" 0")


def test_solve_c6(graph_file):
    c6 = graph_file("C6")
    assert call("solve", c6, "--problem", "mis") == (0, "mis 3\n1 3 5\n")
    assert call("solve", c6, "--problem", "clique") == (0, "clique 2\n0 1\n")
    assert call("solve", c6, "--problem", "cover")[1].startswith("cover 3\n")
    assert call("solve", c6, "--problem", "coloring") == (0, "coloring 2\ncolor 1: 0 2 4\ncolor 2: 1 3 5\n")


def test_solve_with_split_file(graph_file, tmp_path):
    p5 = graph_file("P5")
    split = tmp_path / "split.txt"
    split.write_text(call("recognize", p5)[1])
    assert call("solve", p5, "--problem", "coloring", "--split", split) == (
        0, "coloring 2\ncolor 1: 1 3\ncolor 2: 0 2 4\n")
    split.write_text("center: 0\nclique 0: 1\nclique 1: 2 3 4\n")
    assert call("solve", p5, "--problem", "mis", "--split", split)[0] == 2


def test_solve_refuses_non_gs(graph_file, capsys):
    assert call("solve", graph_file("C5"), "--problem", "mis") == (1, "")
    assert "not a generalized split graph" in capsys.readouterr().err


def test_parse_split():
    v, cs = parse_split("CO-UNIPOLAR\ncenter: 0 2\nclique 0: 1 3\n")
    assert v is Variant.CO_UNIPOLAR and cs.center == {0, 2}
    v, cs = parse_split("# note\ncenter:\nclique 0: 4\n")
    assert v is Variant.UNIPOLAR and cs.center == frozenset() and cs.k == 1


def test_reduce_and_perfect_code(tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("3 1\n0 1 2\n")
    code, text = call("reduce", f)
    assert code == 0 and "# clause 0 -> 0" in text and "# pendant 2 -> 6" in text
    g = parse_edge_list(text)
    assert (g.n, g.m) == (7, 6)
    gpath = tmp_path / "g.txt"
    gpath.write_text(text)
    code, out = call("perfect-code", gpath)
    assert code == 0 and out == "perfect-code 3\n1 5 6\n"
    assert is_perfect_code(g, {1, 5, 6})
    code, text = call("reduce", f, "--bipartite")
    assert parse_edge_list(text).m == 6


def test_perfect_code_none_and_split_graph(graph_file, tmp_path):
    assert call("perfect-code", graph_file("C4")) == (1, "perfect-code none\n")
    g = tmp_path / "k.txt"
    g.write_text("4 5\n0 1\n0 2\n1 2\n0 3\n1 3\n")
    k = tmp_path / "kside.txt"
    k.write_text("0 1 2\n")
    assert call("perfect-code", g, "--split-graph", k) == (0, "perfect-code 1\n0\n")
    assert call("perfect-code", graph_file("P30"))[0] == 2
    assert call("perfect-code", graph_file("P30"), "--max-n", 30)[0] == 0


def test_gen_models():
    code, text = call("gen", "named", "--name", "P5")
    assert code == 0 and text == "5 4\n0 1\n1 2\n2 3\n3 4\n"
    assert call("gen", "unipolar", "--seed", 3, "--n", 6, "--k", 2) == call("gen", "unipolar", "--seed", 3, "--n", 6, "--k", 2)
    assert parse_edge_list(call("gen", "gnp", "--n", 8, "--p", 1.0)[1]).m == 28
    assert call("gen", "co-unipolar", "--n", 5)[0] == 0
    assert call("gen", "named")[0] == 2
    assert call("gen", "named", "--name", "nope")[0] == 2


def test_check_triangulate(graph_file):
    code, out = call("check", "--triangulate", graph_file("C4"))
    assert code == 0
    assert out == "4 5\n# fill:\n# 0 2\n0 1\n0 2\n0 3\n1 2\n2 3\n"


def test_check_suite_deterministic():
    a = call("check", "--suite", "all", "--budget", 15, "--seed", 9)
    b = call("check", "--suite", "all", "--budget", 15, "--seed", 9)
    assert a == b and a[0] == 0
    assert a[1].count("PASS") == 5


@pytest.mark.parametrize("content", ["3 1\n0 0\n", "2 1\n0 5\n", "3 2\n0 1\n", "x\n", "2 1\n0 1\n0 1\n"])
def test_malformed_graph_exit_2(tmp_path, content, capsys):
    path = tmp_path / "bad.txt"
    path.write_text(content)
    assert call("recognize", path)[0] == 2
    err = capsys.readouterr().err
    assert err.startswith("unipolar: error:") and err.count("\n") == 1


def test_usage_errors(capsys):
    assert call("bogus")[0] == 2
    assert call("recognize", "/nonexistent/file")[0] == 2
    assert call("solve", "/nonexistent", "--problem", "xyz")[0] == 2
    assert call("check", "--suite", "nope")[0] == 2


def test_module_entry_point(graph_file):
    proc = subprocess.run([sys.executable, "-m", "unipolar", "recognize", str(graph_file("C5"))],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout == "NOT-GENERALIZED-SPLIT\n"
