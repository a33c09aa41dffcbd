import json
import subprocess
import sys

import pytest

from edgeres.cli import main
from edgeres.families import FamilySpec, build_family, step_ideal
from edgeres.graph import Graph, complement, format_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def gfile(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(format_graph(g))
        return str(p)
    return write


def test_betti_of_a1_complement(capsys, gfile):
    path = gfile(complement(build_family(FamilySpec("A1", 1))))
    code, out, _ = run(capsys, "betti", path, "--threads", "1")
    assert code == 0
    lines = out.splitlines()
    assert "2\t4\t1" in lines and "2\t5\t1" in lines


def test_betti_json_and_power(capsys, gfile):
    path = gfile(Graph.from_edges(2, [(1, 2)]))
    code, out, _ = run(capsys, "betti", path, "--power", "2", "--json")
    assert code == 0 and json.loads(out)["entries"] == [[0, 4, 1]]


def test_stats(capsys, gfile):
    path = gfile(complement(build_family(FamilySpec("C"))))
    code, out, _ = run(capsys, "stats", path, "--field", "2")
    assert code == 0
    assert "index\t1" in out.splitlines() and "almost_maximal\ttrue" in out.splitlines()


def test_index_of_c5_complement(capsys, gfile):
    code, out, _ = run(capsys, "index", gfile(complement(Graph.cycle(5))))
    assert (code, out) == (0, "2\n")


def test_family_output(capsys):
    code, out, _ = run(capsys, "family", "--kind", "a1", "--t", "1")
    assert code == 0 and out == format_graph(build_family(FamilySpec("A1", 1)))
    code, out, _ = run(capsys, "family", "--kind", "C", "--complement", "--json")
    assert json.loads(out)["n"] == 5


def test_classify_relabeled_c(capsys, gfile):
    gc = complement(build_family(FamilySpec("C")))
    perm = {1: 3, 2: 5, 3: 1, 4: 2, 5: 4}
    relabeled = Graph.from_edges(5, [(perm[u], perm[v]) for u, v in gc.edges()])
    code, out, _ = run(capsys, "classify", gfile(relabeled))
    assert (code, out) == (0, "C\n")
    code, out, _ = run(capsys, "classify", gfile(complement(build_family(FamilySpec("A3", 2)))))
    assert out == "A3 t=2\n"
    code, out, _ = run(capsys, "classify", gfile(Graph.cycle(6)))
    assert out == "none\n"


def test_evenconn(capsys, gfile):
    code, out, _ = run(capsys, "evenconn", gfile(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])), "--edges", "2-3")
    assert code == 0 and out == "4\n1 2\n1 4\n2 3\n3 4\n"


def test_linquo(capsys, tmp_path):
    good = tmp_path / "good.txt"
    good.write_text("x1*x2\nx1*x3\nx2*x3\n")
    assert run(capsys, "linquo", str(good))[:2] == (0, "ok\n")
    bad = tmp_path / "bad.txt"
    bad.write_text("x1*x2\nx3*x4\n")
    code, out, _ = run(capsys, "linquo", str(bad), "--json")
    assert code == 1 and json.loads(out)["witness"] == {"q": 1, "l": 2, "quotient": "x1*x2"}
    step = tmp_path / "step.txt"
    step.write_text(step_ideal(1, 1).to_text())
    assert run(capsys, "linquo", str(step), "--banerjee", "1", "1")[0] == 0


def test_verify_commands(capsys):
    code, out, _ = run(capsys, "verify", "classification", "--n", "5", "--threads", "1")
    assert code == 0 and out.startswith("classification\tPASS")
    code, out, _ = run(capsys, "verify", "chars", "--tmax", "1", "--fields", "q,2", "--json")
    assert code == 0 and json.loads(out)["passed"]
    code, _, err = run(capsys, "verify", "classification", "--n", "7")
    assert code == 2 and "--extended" in err


@pytest.mark.parametrize("argv", [
    ["betti", "/nonexistent/file"],
    ["betti", "GRAPH", "--field", "4"],
    ["evenconn", "GRAPH", "--edges", "1-3"],
    ["evenconn", "GRAPH", "--edges", "x"],
    ["family", "--kind", "Z"],
    ["betti", "GRAPH", "--threads", "0"],
])
def test_bad_input_exits_two(capsys, gfile, argv):
    path = gfile(Graph.from_edges(3, [(1, 2), (2, 3)]))
    code, _, err = run(capsys, *[path if a == "GRAPH" else a for a in argv])
    assert code == 2 and err.startswith("edgeres:")


def test_computation_guard_exits_one(capsys, gfile):
    code, _, err = run(capsys, "classify", gfile(Graph.cycle(10)))
    assert code == 1 and err


def test_output_is_identical_across_thread_counts(capsys, gfile):
    path = gfile(complement(build_family(FamilySpec("B", 1))))
    outs = {run(capsys, "betti", path, "--power", "2", "--threads", k)[1] for k in ("1", "2")}
    assert len(outs) == 1


def test_module_entry_point(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(format_graph(complement(Graph.cycle(5))))
    res = subprocess.run([sys.executable, "-m", "edgeres.cli", "index", str(p)], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "2\n"
