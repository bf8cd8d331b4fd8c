import json
import subprocess
import sys

import pytest

from consistent_subset import cli
from consistent_subset.errors import ColorGap, NotTwoCnf, ParseError
from consistent_subset.graph import is_consistent
from consistent_subset.io import parse_dimacs_2cnf, parse_instance, parse_intervals, parse_subset


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_parse_instance(tmp_path):
    g = parse_instance(write(tmp_path, "a.json", '{"colors":[0,1],"edges":[[0,1]]}'))
    assert g.vertex_count == 2 and g.color_count == 2
    with pytest.raises(ParseError):
        parse_instance(write(tmp_path, "b.json", '{"colors":[0,1],'))
    with pytest.raises(ColorGap):
        parse_instance(write(tmp_path, "c.json", '{"colors":[0,2],"edges":[[0,1]]}'))


def test_parse_intervals_and_subset(tmp_path):
    f = parse_intervals(
        write(tmp_path, "i.json", '{"intervals":[{"lo":0,"hi":2,"color":0},{"lo":1,"hi":3,"color":1}]}')
    )
    assert len(f) == 2
    assert parse_subset(write(tmp_path, "s.json", '{"subset":[2,0]}')) == [2, 0]


def test_parse_dimacs(tmp_path):
    f = parse_dimacs_2cnf(write(tmp_path, "f.cnf", "c fig\np cnf 3 3\n1 2 0\n1 -3 0\n-2 -3 0\n"))
    assert f.num_vars == 3
    assert f.clauses == ((1, 2), (1, -3), (-2, -3))
    with pytest.raises(NotTwoCnf):
        parse_dimacs_2cnf(write(tmp_path, "g.cnf", "p cnf 3 1\n1 2 3 0\n"))
    empty = parse_dimacs_2cnf(write(tmp_path, "h.cnf", "p cnf 1 0\n"))
    assert empty.m == 0
    with pytest.raises(ParseError):
        parse_dimacs_2cnf(write(tmp_path, "k.cnf", "p cnf 1 1\n1 5 0\n"))


def run(args):
    return cli.main([str(a) for a in args])


def test_solve_and_verify(tmp_path, capsys):
    inst = write(tmp_path, "t.json", '{"colors":[0,0,0,0],"edges":[[0,1],[1,2],[2,3]]}')
    out = tmp_path / "out.json"
    assert run(["solve", "--algorithm", "tree-dp", "--input", inst, "--output", out]) == 0
    doc = json.loads(out.read_text())
    assert doc["size"] == 1 and doc["algorithm"] == "tree-dp"
    assert set(doc) == {"size", "subset", "algorithm", "stats"}
    assert run(["verify", "--input", inst, "--subset", out]) == 0

    allv = write(tmp_path, "all.json", '{"subset":[0,1,2,3]}')
    assert run(["verify", "--input", inst, "--subset", allv]) == 0


def test_verify_inconsistent(tmp_path, capsys):
    inst = write(tmp_path, "e.json", '{"colors":[0,1],"edges":[[0,1]]}')
    s = write(tmp_path, "s.json", '{"subset":[0]}')
    assert run(["verify", "--input", inst, "--subset", s]) == 1
    assert "vertex 1" in capsys.readouterr().out


def test_auto_dispatch():
    from consistent_subset.graph import build_graph

    tree = build_graph([0, 1, 0], [[0, 1], [1, 2]])
    cycle = build_graph([0, 1, 0], [[0, 1], [1, 2], [0, 2]])
    assert cli.choose_algorithm(tree, "auto", 16) == "tree-dp"
    assert cli.choose_algorithm(tree, "auto", 1) == "brute"
    assert cli.choose_algorithm(cycle, "auto", 16) == "brute"
    r = cli.run_solver(cycle, "auto")
    assert r.algorithm == "brute" and is_consistent(cycle, r.subset)


def test_exit_codes(tmp_path):
    bad = write(tmp_path, "bad.json", "{")
    assert run(["solve", "--input", bad]) == 2
    assert run(["solve", "--input", tmp_path / "missing.json"]) == 2
    gap = write(tmp_path, "gap.json", '{"colors":[0,2],"edges":[[0,1]]}')
    assert run(["solve", "--input", gap]) == 3
    path = write(tmp_path, "p.json", json.dumps({"colors": [0] * 30, "edges": [[k, k + 1] for k in range(29)]}))
    cyc_edges = [[k, k + 1] for k in range(29)] + [[0, 29]]
    cyc = write(tmp_path, "c.json", json.dumps({"colors": [0] * 30, "edges": cyc_edges}))
    assert run(["solve", "--input", path]) == 0
    assert run(["solve", "--input", cyc]) == 4
    with pytest.raises(SystemExit) as exc:
        run(["solve"])
    assert exc.value.code == 2


def test_reduce_max2sat(tmp_path):
    cnf = write(tmp_path, "f.cnf", "p cnf 3 3\n1 2 0\n1 -3 0\n-2 -3 0\n")
    out, roles, sub = tmp_path / "t.json", tmp_path / "r.json", tmp_path / "s.json"
    args = ["reduce-max2sat", "--input", cnf, "--M", 27, "--output", out, "--roles", roles]
    assert run(args + ["--assignment", "0,0,0", "--subset-out", sub]) == 0
    g = parse_instance(out)
    assert (g.vertex_count, g.color_count) == (252, 91)
    assert len(json.loads(roles.read_text())["vertices"]) == 252
    assert run(["verify", "--input", out, "--subset", sub]) == 0
    assert len(parse_subset(sub)) == 95
    assert run(["reduce-max2sat", "--input", cnf, "--M", 5, "--output", out]) == 3


def test_reduce_vertex_cover(tmp_path):
    k4 = write(tmp_path, "k4.json", '{"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}')
    out, ivs, sub = tmp_path / "g.json", tmp_path / "i.json", tmp_path / "s.json"
    args = ["reduce-vertex-cover", "--input", k4, "--p2", 8, "--p3", 16, "--output", out]
    assert run(args + ["--intervals", ivs, "--cover", "0,1,2", "--subset-out", sub]) == 0
    assert len(parse_intervals(ivs)) == 109
    assert run(["verify", "--input", out, "--subset", sub]) == 0
    path = write(tmp_path, "p.json", '{"edges":[[0,1],[1,2]]}')
    assert run(["reduce-vertex-cover", "--input", path, "--output", out]) == 3


def test_gen_and_bench(tmp_path):
    t1, t2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["gen-random-tree", "--n", 15, "--colors", 3, "--seed", 1, "--output", t1, "--dot", tmp_path / "a.dot"]) == 0
    assert run(["gen-random-tree", "--n", 15, "--colors", 3, "--seed", 1, "--output", t2]) == 0
    assert t1.read_bytes() == t2.read_bytes()
    assert (tmp_path / "a.dot").read_text().startswith("graph G {")
    csv_path = tmp_path / "b.csv"
    assert run(["bench", "--sizes", "8,10", "--colors", "2", "--algorithms", "tree-dp,brute", "--output", csv_path]) == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "n,c,algorithm,millis,dp_evaluations"
    assert len(lines) == 5


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "consistent_subset", "gen-random-tree", "--n", "5", "--colors", "2", "--seed", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["colors"]
