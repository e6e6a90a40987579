import json

import pytest

from kcds.cli import dense_main, oracle_main

from conftest import random_edges, write_edge_file

TRIANGLE = [(0, 1), (1, 2), (0, 2)]
K5_PENDANT = [(i, j) for i in range(5) for j in range(i + 1, 5)] + [(0, 5)]


def run_dense(capsys, *args):
    code = dense_main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_spath_triangle_example(tmp_path, capsys):
    path = write_edge_file(tmp_path, "triangle.txt", TRIANGLE)
    code, out, err = run_dense(
        capsys, path, "--algo", "spath", "--k", "3",
        "--samples", "10", "--iters", "1", "--seed", "1",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["density"] == pytest.approx(1 / 3)
    assert doc["density_mode"] == "sampled"
    assert sorted(doc["nodes"]) == [0, 1, 2]
    assert "[solve]" in err and "[load]" in err


def test_kcl_matches_oracle_densest(tmp_path, capsys):
    path = write_edge_file(tmp_path, "g12.txt", random_edges(12, 0.5, seed=19))
    code, out, _ = run_dense(
        capsys, path, "--algo", "kcl", "--k", "4", "--iters", "100",
    )
    assert code == 0
    solver_density = json.loads(out)["density"]

    code2 = oracle_main(["densest", "--k", "4", path])
    out2, _ = capsys.readouterr()
    assert code2 == 0
    assert float(out2.strip()) == pytest.approx(solver_density)


def test_psctl_report_fields(tmp_path, capsys):
    path = write_edge_file(tmp_path, "g.txt", random_edges(14, 0.5, seed=7))
    code, out, _ = run_dense(
        capsys, path, "--algo", "psctl", "--k", "3", "--iters", "5",
        "--seed", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["solver"] == "psctl"
    assert doc["k"] == 3 and doc["T"] == 5 and doc["seed"] == 3
    assert doc["t"] is None
    assert doc["eta"] > 0 and doc["delta"] > 0
    assert doc["density_mode"] == "exact"
    assert doc["size"] == len(doc["nodes"])


def test_reports_are_reproducible(tmp_path, capsys):
    path = write_edge_file(tmp_path, "g.txt", random_edges(16, 0.4, seed=77))
    docs = []
    for _ in range(2):
        code, out, _ = run_dense(
            capsys, path, "--algo", "psctl", "--k", "3", "--iters", "4",
            "--seed", "11",
        )
        assert code == 0
        doc = json.loads(out)
        doc.pop("wall_ms")
        docs.append(doc)
    assert docs[0] == docs[1]


def test_out_file(tmp_path, capsys):
    path = write_edge_file(tmp_path, "t.txt", TRIANGLE)
    dest = tmp_path / "report.json"
    code, out, _ = run_dense(
        capsys, path, "--algo", "kcl", "--k", "3", "--iters", "2",
        "--out", str(dest),
    )
    assert code == 0
    doc = json.loads(dest.read_text())
    assert doc["density"] == pytest.approx(1 / 3)
    assert "report.json" in out  # stdout keeps a one-line summary


def test_usage_errors(tmp_path, capsys):
    path = write_edge_file(tmp_path, "t.txt", TRIANGLE)
    with pytest.raises(SystemExit) as exc:
        dense_main([path, "--algo", "kcl", "--k", "1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        dense_main([path, "--algo", "nope", "--k", "3"])
    with pytest.raises(SystemExit):
        dense_main([path, "--algo", "kcl", "--k", "3", "--shuffle-pairs"])
    capsys.readouterr()


def test_missing_file_is_runtime_error(capsys):
    code = dense_main(["definitely-not-here.txt", "--algo", "kcl", "--k", "3"])
    _, err = capsys.readouterr()
    assert code == 1
    assert "error:" in err


def test_oracle_cliques_triangle(tmp_path, capsys):
    path = write_edge_file(tmp_path, "t.txt", TRIANGLE)
    assert oracle_main(["cliques", "--k", "3", path]) == 0
    out, _ = capsys.readouterr()
    assert out.strip() == "1"


def test_oracle_densest_k5_pendant(tmp_path, capsys):
    path = write_edge_file(tmp_path, "k5p.txt", K5_PENDANT)
    assert oracle_main(["densest", "--k", "3", path]) == 0
    out, _ = capsys.readouterr()
    assert out.strip() == "2.0"


def test_oracle_densest_nodes_flag(tmp_path, capsys):
    path = write_edge_file(tmp_path, "k5p.txt", K5_PENDANT)
    assert oracle_main(["densest", "--k", "3", "--nodes", path]) == 0
    out, _ = capsys.readouterr()
    lines = out.strip().splitlines()
    assert lines[0] == "2.0"
    assert lines[1] == "0 1 2 3 4"


def test_oracle_color_paths_matches_solver_w(tmp_path, capsys):
    import kcds
    from kcds.sampler import count_color_paths

    edges = random_edges(15, 0.4, seed=5)
    path = write_edge_file(tmp_path, "g15.txt", edges)
    assert oracle_main(["color-paths", "--k", "4", path]) == 0
    out, _ = capsys.readouterr()
    g = kcds.load_edge_list(path)
    assert int(out.strip()) == count_color_paths(g, 4).total


def test_oracle_cap_exceeded(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("KCDS_ORACLE_MAX_SUBSETS", "4")
    path = write_edge_file(tmp_path, "t.txt", K5_PENDANT)
    code = oracle_main(["densest", "--k", "3", path])
    _, err = capsys.readouterr()
    assert code == 1
    assert "cap" in err
