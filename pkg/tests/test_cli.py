import json
import math


from heawood.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, "--output", "json", *argv)
    assert code == 0
    return json.loads(out)


def test_parse_range():
    assert parse_range("1..3") == [1, 2, 3]
    assert parse_range("2..-1") == [2, 1, 0, -1]


def test_analyze_octahedron(capsys):
    data = run_json(capsys, "analyze", "octahedron", "--surface", "auto")
    assert data["a"] == 4.0
    assert data["tight"]
    assert data["surface_source"] == "planarity-derived"
    chromatic = next(e for e in data["entries"] if e["name"] == "chromatic")
    assert chromatic["value"] == 4.0


def test_analyze_k6_projective_plane(capsys):
    data = run_json(capsys, "analyze", "complete:6", "--surface", "nonorientable:1")
    heawood = next(e for e in data["entries"] if e["name"] == "heawood")
    assert heawood["value"] == 6.0 and data["a"] == 6.0


def test_analyze_text_has_twelve_digits(capsys):
    code, out, _ = run(capsys, "analyze", "cycle:7")
    assert code == 0
    assert f"{2 - 2 * math.cos(2 * math.pi / 7):.12g}" in out


def test_analyze_files(capsys, tmp_path):
    edges = tmp_path / "k4.txt"
    edges.write_text("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert run(capsys, "analyze", str(edges))[0] == 0
    g6 = tmp_path / "k3.g6"
    g6.write_text("Bw\n")
    assert run(capsys, "analyze", str(g6))[0] == 0
    garbage = tmp_path / "garbage.txt"
    garbage.write_text("not a graph at all\n")
    assert run(capsys, "analyze", str(garbage))[0] == 2


def test_analyze_errors(capsys, tmp_path):
    disconnected = tmp_path / "two.txt"
    disconnected.write_text("4 2\n0 1\n2 3\n")
    code, _, err = run(capsys, "analyze", str(disconnected))
    assert code == 3 and "disconnected" in err
    assert run(capsys, "analyze", "octahedron", "--surface", "torus")[0] == 2
    assert run(capsys, "--bogus-flag", "analyze", "octahedron")[0] == 2


def test_surface_genus_range(capsys):
    data = run_json(capsys, "surface", "--genus-range", "0..3", "--orientable", "true")
    assert [r["heawood"] for r in data["rows"]] == [4, 7, 8, 9]


def test_surface_klein_annotation(capsys):
    code, out, _ = run(capsys, "surface", "--chi-range", "1..0", "--orientable", "false")
    assert code == 0
    assert "cap 6 < H=7" in out


def test_surface_errors(capsys):
    assert run(capsys, "surface", "--chi-range", "3..3")[0] == 2
    assert run(capsys, "surface", "--chi-range", "a..b")[0] == 2
    assert run(capsys, "surface")[0] == 2
    assert run(capsys, "surface", "--genus-range", "0..1", "--orientable", "false")[0] == 2


def test_sweep(capsys):
    data = run_json(capsys, "sweep", "--predicate", "fiedler_chain_holds", "--max-n", "6")
    # 143 connected graphs on at most 6 vertices, less K_1 .. K_6
    assert data["counterexamples"] == [] and data["checked"] == 137


def test_sweep_filters(capsys):
    data = run_json(capsys, "sweep", "--predicate", "conjecture1_planar_cap", "--max-n", "6",
                    "--filters", "planar", "dmax<=4")
    assert data["filters"] == ["planar", "dmax<=4"]
    assert data["counterexamples"] == []


def test_sweep_cap(capsys, monkeypatch):
    monkeypatch.delenv("HEAWOOD_MAX_N", raising=False)
    assert run(capsys, "sweep", "--predicate", "fiedler_chain_holds", "--max-n", "9")[0] == 4
    monkeypatch.setenv("HEAWOOD_MAX_N", "5")
    assert run(capsys, "sweep", "--predicate", "fiedler_chain_holds", "--max-n", "6")[0] == 4


def test_trend(capsys):
    data = run_json(capsys, "trend", "--family", "double_wheel", "--n", "4..20")
    for row in data["rows"]:
        n = row["n"]
        assert abs(row["a"] - min(4 - 2 * math.cos(2 * math.pi / n), n)) < 1e-8
    assert run(capsys, "trend", "--family", "petersen", "--n", "3..4")[0] == 2


def test_ramanujan(capsys):
    data = run_json(capsys, "ramanujan", "--d", "8")
    assert not data["applicable"]
    data = run_json(capsys, "ramanujan", "--d", "9")
    assert data["genus_lower_bound"] == 1
    code, out, _ = run(capsys, "ramanujan", "complete:10")
    assert code == 0 and "inapplicable" in out
    code, out, _ = run(capsys, "ramanujan", "path:4")
    assert code == 0 and "not a connected regular graph" in out
    assert run(capsys, "ramanujan")[0] == 2


def test_family(capsys):
    code, out, _ = run(capsys, "family", "complete:3", "--format", "graph6")
    assert (code, out.strip()) == (0, "Bw")
    code, out, _ = run(capsys, "family", "complete_bipartite:2,2")
    assert out.splitlines()[0] == "4 4"
    assert run(capsys, "family", "cycle")[0] == 2
