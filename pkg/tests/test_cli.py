import json
import subprocess
import sys

import pydot
import pytest

from graphsmooth import families as F
from graphsmooth.cli import main, render_dot
from graphsmooth.graph import parse_edge_list, render_edge_list


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(capsys, monkeypatch):
    return lambda argv, stdin=None: run(capsys, monkeypatch, argv, stdin)


def edge_file(tmp_path, G, name="g.txt"):
    p = tmp_path / name
    p.write_text(render_edge_list(G))
    return str(p)


def test_gen_family(cli):
    code, out, _ = cli(["gen", "--family", "path", "--n", "4"])
    assert code == 0 and parse_edge_list(out) == F.path(4)
    code, out, _ = cli(["gen", "--family", "starlike", "--parts", "3,3,3"])
    assert code == 0 and parse_edge_list(out).n == 10
    code, out, _ = cli(["gen", "--family", "broom", "--n", "6", "--ell", "3"])
    assert parse_edge_list(out) == F.broom(3, 6)


def test_gen_rgg(cli):
    code, out, err = cli(["gen", "--rgg", "--n", "15", "--radius", "0.45", "--seed", "1"])
    G = parse_edge_list(out)
    assert code == 0 and G.n == 15
    assert "seed used" in err
    assert cli(["gen", "--rgg", "--n", "15", "--radius", "0.45", "--seed", "1"])[1] == out


def test_gen_invalid(cli):
    assert cli(["gen", "--family", "wheel", "--n", "3"])[0] == 2
    assert cli(["gen"])[0] == 2
    assert cli(["gen", "--rgg", "--n", "10", "--radius", "0.01", "--max-retries", "2"])[0] == 2


def test_usage_error(cli):
    assert cli(["frobnicate"])[0] == 1
    assert cli(["compute", "--cap", "many"])[0] == 1


def test_compute_p5(cli, tmp_path):
    code, out, _ = cli(["compute", "-i", edge_file(tmp_path, F.path(5))])
    rep = json.loads(out)
    assert code == 0
    assert rep["b"]["b"] == {"exact": "5/12", "float": 5 / 12}
    assert rep["b"]["side"] == [0, 1]
    assert rep["a"]["a"] == pytest.approx(0.381966, abs=1e-6)


def test_compute_cube_and_gamma(cli, tmp_path):
    rep = json.loads(cli(["compute", "-i", edge_file(tmp_path, F.cube()), "--what", "b"])[1])
    assert rep["b"]["b"]["exact"] == "1"
    rep = json.loads(cli(["compute", "-i", edge_file(tmp_path, F.path(6)), "--what", "gamma"])[1])
    assert rep["gamma"]["gamma"] == pytest.approx(0.4, abs=1e-9)
    assert set(rep) == {"graph", "gamma"}


def test_compute_from_stdin(cli):
    code, out, _ = cli(["compute", "--what", "b"], stdin=render_edge_list(F.star(5)))
    assert code == 0 and json.loads(out)["b"]["b"]["exact"] == "5/8"


def test_compute_is_byte_identical(cli, tmp_path):
    path = edge_file(tmp_path, F.wheel(7))
    argv = ["compute", "-i", path, "--what", "a,b,gamma,bounds"]
    assert cli(argv)[1] == cli(argv)[1]
    rep = json.loads(cli(argv + ["--timings"])[1])
    assert set(rep["timings"]) == {"a", "b", "gamma", "bounds"}


def test_compute_output_file(cli, tmp_path):
    out_path = tmp_path / "out.json"
    code, out, _ = cli(["compute", "-i", edge_file(tmp_path, F.path(4)), "-o", str(out_path)])
    assert code == 0 and out == ""
    assert json.loads(out_path.read_text())["b"]["b"]["exact"] == "1/2"


def test_input_errors(cli, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n1 1\n")
    code, _, err = cli(["compute", "-i", str(bad)])
    assert code == 2 and "line 3" in err
    disc = tmp_path / "disc.txt"
    disc.write_text("4\n0 1\n2 3\n")
    code, _, err = cli(["compute", "-i", str(disc)])
    assert code == 2 and "connected" in err
    assert cli(["compute", "-i", str(tmp_path / "missing.txt")])[0] == 2
    assert cli(["compute", "-i", edge_file(tmp_path, F.path(4)), "--what", "c"])[0] == 2


def test_cap_and_heuristic(cli, tmp_path):
    path = edge_file(tmp_path, F.cycle(14))
    code, _, err = cli(["compute", "-i", path, "--what", "b", "--cap", "10"])
    assert code == 3 and "--heuristic" in err
    code, out, _ = cli(["compute", "-i", path, "--what", "b", "--cap", "10", "--heuristic"])
    rep = json.loads(out)
    assert code == 0 and rep["b"]["method"] == "heuristic"
    assert cli(["bounds", "-i", path, "--cap", "10"])[0] == 3
    code, out, _ = cli(["bounds", "-i", path, "--cap", "10", "--heuristic"])
    assert code == 0 and json.loads(out)["bounds"]["b"] is None


def test_bounds_json(cli, tmp_path):
    rep = json.loads(cli(["bounds", "-i", edge_file(tmp_path, F.complete(5))])[1])["bounds"]
    assert rep["all_hold"] and rep["b"]["exact"] == "5/2"
    names = {r["name"] for r in rep["records"]}
    assert {"mohar_lower", "mohar_upper", "cheeger_upper", "l2_lower", "l2_upper", "xi_lower",
            "degree_upper", "mincut_upper", "sqrt_ma_upper"} == names


def test_partition_p4(cli, tmp_path):
    code, out, err = cli(["partition", "-i", edge_file(tmp_path, F.path(4)), "--method", "l1"])
    assert code == 0
    assert "cut_size=1" in err and "parts=2|2" in err and "density=1/4" in err
    (graph,) = pydot.graph_from_dot_data(out)
    assert len(graph.get_edges()) == 3


def test_partition_star(cli, tmp_path):
    # the sparsest cut of a star splits off a single leaf
    code, out, err = cli(["partition", "-i", edge_file(tmp_path, F.star(5)), "--method", "l1"])
    assert code == 0 and "cut_size=1" in err and "parts=4|1" in err
    dashed = [e for e in pydot.graph_from_dot_data(out)[0].get_edges() if e.get("style") == "dashed"]
    assert len(dashed) == 1


def test_partition_l2_dot_parses(cli, tmp_path):
    for seed, T in enumerate([F.path(7), F.star(6), F.broom(3, 8)]):
        code, out, _ = cli(["partition", "-i", edge_file(tmp_path, T, f"t{seed}.txt"), "--method", "l2"])
        assert code == 0
        (graph,) = pydot.graph_from_dot_data(out)
        assert len(graph.get_nodes()) >= T.n


def test_render_dot_colors():
    dot = render_dot(F.path(3), {0})
    assert '0 [fillcolor="lightblue"]' in dot and '2 [fillcolor="salmon"]' in dot
    assert "0 -- 1 [style=dashed, color=red];" in dot and "  1 -- 2;" in dot


def test_compare(cli, tmp_path):
    rep = json.loads(cli(["compare", "-i", edge_file(tmp_path, F.path(4))])[1])
    assert rep["l1"]["side"] in ([0, 1], [2, 3]) and sorted(rep["l2"]["part_sizes"]) == [2, 2]
    assert rep["equal_density"] and rep["l1_density_le_l2"]
    rep = json.loads(cli(["compare", "-i", edge_file(tmp_path, F.complete(5))])[1])
    assert rep["equal_density"] and rep["l1"]["density"]["exact"] == "1"


def test_compare_rgg(cli, tmp_path):
    _, text, _ = cli(["gen", "--rgg", "--n", "12", "--radius", "0.5", "--seed", "4"])
    p = tmp_path / "rgg.txt"
    p.write_text(text)
    rep = json.loads(cli(["compare", "-i", str(p)])[1])
    assert rep["l1_density_le_l2"]


def test_export_model(cli, tmp_path):
    code, out, _ = cli(["export-model", "-i", edge_file(tmp_path, F.path(2))])
    assert code == 0 and out.startswith("# l1 graph smoothing model: n=2 m=1\nVARIABLES\n")
    assert out.rstrip().endswith("END")


def test_module_entry_point(tmp_path):
    res = subprocess.run(
        [sys.executable, "-m", "graphsmooth", "gen", "--family", "cycle", "--n", "5"],
        capture_output=True, text=True, check=True,
    )
    assert parse_edge_list(res.stdout) == F.cycle(5)
    help_text = subprocess.run([sys.executable, "-m", "graphsmooth", "--help"], capture_output=True, text=True).stdout
    for cmd in ("gen", "compute", "partition", "bounds", "compare", "export-model"):
        assert cmd in help_text
