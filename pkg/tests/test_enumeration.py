import json
import math

import networkx as nx
import pytest

from heawood import enumeration, graph6
from heawood.canon import are_isomorphic, canonical_form, certificate, lexmin_code
from heawood.enumeration import (
    CONNECTED_COUNTS,
    EnumerationError,
    connected_codes_bruteforce,
    connected_graphs,
    generate_cubic,
    parse_filter,
    recheck,
    sweep,
    sweep_graphs,
    trend,
)
from heawood.graph import complete, complete_bipartite, cube, cycle, double_wheel, octahedron, petersen, prism
from heawood.spectral import algebraic_connectivity


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(connected_graphs(n)) == CONNECTED_COUNTS[n - 1]


@pytest.mark.parametrize("n", [5, 6, 7])
def test_augmentation_matches_bruteforce(n):
    augmented = {lexmin_code(g) for g in connected_graphs(n, method="augment")}
    assert augmented == set(connected_codes_bruteforce(n))


def test_graphs_are_pairwise_non_isomorphic():
    graphs = connected_graphs(6)
    certs = {certificate(g.masks) for g in graphs}
    assert len(certs) == len(graphs)
    reps = [nx.from_graph6_bytes(graph6.encode(g).encode()) for g in graphs[:40]]
    for i in range(len(reps)):
        for j in range(i):
            assert not nx.is_isomorphic(reps[i], reps[j])


def test_order_is_deterministic():
    codes = [graph6.encode(g) for g in connected_graphs(6)]
    assert codes == sorted(codes)


def test_canonical_forms_agree():
    for g in connected_graphs(6):
        perm = list(reversed(range(g.n)))
        h = g.relabel(perm)
        assert lexmin_code(g) == lexmin_code(h)
        assert certificate(g.masks) == certificate(h.masks)
        assert canonical_form(g) == canonical_form(h)
    assert are_isomorphic(double_wheel(4), octahedron())
    assert not are_isomorphic(prism(3), complete_bipartite(3, 3))


@pytest.mark.parametrize("n, count", [(4, 1), (6, 2), (8, 5), (10, 19)])
def test_cubic_counts(n, count):
    graphs = generate_cubic(n)
    assert len(graphs) == count
    assert all(g.n == n and set(g.degrees) == {3} for g in graphs)


def test_cubic_contains_named_graphs():
    assert any(are_isomorphic(g, cube()) for g in generate_cubic(8))
    assert any(are_isomorphic(g, petersen()) for g in generate_cubic(10))


def test_filters():
    assert parse_filter("planar")(octahedron())
    assert not parse_filter("planar")(petersen())
    assert parse_filter("cubic")(petersen())
    assert parse_filter("dmax<=4")(octahedron())
    assert not parse_filter("dmax:3")(octahedron())
    with pytest.raises(EnumerationError):
        parse_filter("pretty")


def test_sweep_fiedler_chain():
    report = sweep("fiedler_chain_holds", 6)
    assert report.checked > 0 and report.counterexamples == []


def test_conjecture1_extremal_small():
    report = sweep("conjecture1_planar_cap", 6)
    assert report.counterexamples == []
    found = [graph6.decode(x["g6"]) for x in report.extremal]
    assert len(found) == 2
    assert any(are_isomorphic(g, complete(4)) for g in found)
    assert any(are_isomorphic(g, octahedron()) for g in found)


def test_conjecture2_small():
    report = sweep("conjecture2_planar_bipartite", 7)
    assert report.counterexamples == []


def test_sweep_json_schema():
    data = json.loads(sweep("planar_cubic_cap", 6).to_json())
    assert list(data) == ["predicate", "n_max", "filters", "checked", "counterexamples", "extremal"]
    assert [are_isomorphic(graph6.decode(x["g6"]), prism(3)) for x in data["extremal"]] == [True]


def test_sweep_errors():
    with pytest.raises(EnumerationError):
        sweep("no_such_predicate", 4)
    with pytest.raises(EnumerationError):
        sweep("fiedler_chain_holds", 99)


def test_parallel_matches_serial():
    serial = sweep("verdict_sound", 6, workers=1).to_json()
    parallel = sweep("verdict_sound", 6, workers=3).to_json()
    assert serial == parallel


def test_counterexample_is_reported_and_rechecked(caplog):
    # a cap of 3 away from K_4 and the octahedron fails on the 5-rim double wheel
    enumeration.PREDICATES["_cap3"] = lambda g: enumeration._cap(g, 3.0)
    try:
        report = sweep_graphs("_cap3", [double_wheel(5), cycle(5)], n_max=7)
        assert report.counterexamples == [graph6.encode(double_wheel(5))]
        assert recheck(report)
        assert "counterexample" in caplog.text
    finally:
        del enumeration.PREDICATES["_cap3"]


def test_trend_double_wheel():
    for n, a in trend("double_wheel", range(4, 21)):
        assert abs(a - min(4 - 2 * math.cos(2 * math.pi / n), n)) < 1e-8


def test_trend_closed_forms():
    for family_id, form in enumeration.CLOSED_FORMS.items():
        for n, a in trend(family_id, range(4, 10)):
            assert a == pytest.approx(form(n), abs=1e-8), (family_id, n)


def test_trend_rejects_fixed_families():
    with pytest.raises(EnumerationError):
        trend("petersen", range(3, 5))


def test_read_graph6_file(tmp_path):
    path = tmp_path / "g.g6"
    path.write_text("Bw\nCl\n")
    assert [g.e for g in enumeration.read_graph6_file(str(path))] == [3, 4]


def test_spectrum_of_every_small_graph_is_nonnegative():
    for g in connected_graphs(6):
        assert algebraic_connectivity(g) > 1e-9
