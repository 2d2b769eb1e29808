import random

import networkx as nx
import pytest

from heawood.graph import (
    build,
    complete,
    complete_bipartite,
    cube,
    cycle,
    disjoint_union,
    double_wheel,
    empty,
    octahedron,
    path,
    petersen,
)
from heawood.invariants import (
    PreconditionError,
    ResourceLimitError,
    chromatic_number,
    component_count,
    girth,
    is_bipartite,
    is_connected,
    is_planar,
    is_regular,
    shortest_cycles,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from heawood.planarity import (
    biconnected_blocks,
    find_kuratowski_subdivision,
    kuratowski_witness,
    planar_by_path_addition,
)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def random_graph(rng, n, p):
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


@pytest.mark.parametrize(
    "g, expected",
    [
        (complete(4), 3),
        (cycle(9), 9),
        (petersen(), 5),
        (cube(), 4),
        (complete_bipartite(3, 4), 4),
        (path(6), None),
        (empty(3), None),
    ],
)
def test_girth(g, expected):
    assert girth(g) == expected


def test_shortest_cycles_have_girth_length():
    g = petersen()
    cycles = shortest_cycles(g)
    assert cycles and all(len(c) == 5 for c in cycles)
    for c in cycles:
        for k in range(5):
            assert g.has_edge(c[k], c[(k + 1) % 5])


@pytest.mark.parametrize(
    "g, expected",
    [(complete(5), 4), (cycle(6), 2), (path(4), 1), (petersen(), 3), (octahedron(), 4), (cube(), 3)],
)
def test_vertex_connectivity(g, expected):
    assert vertex_connectivity(g) == expected


def test_vertex_connectivity_disconnected():
    with pytest.raises(PreconditionError):
        vertex_connectivity(disjoint_union(complete(3), complete(3)))


@pytest.mark.parametrize(
    "g, expected",
    [(complete(6), 6), (cycle(7), 3), (cycle(8), 2), (petersen(), 3), (double_wheel(5), 4), (empty(3), 1)],
)
def test_chromatic_number(g, expected):
    assert chromatic_number(g) == expected


def test_chromatic_resource_cap():
    with pytest.raises(ResourceLimitError):
        chromatic_number(complete(31))


def test_random_graphs_against_networkx():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(2, 11)
        g = random_graph(rng, n, rng.uniform(0.15, 0.8))
        h = to_nx(g)
        assert is_connected(g) == nx.is_connected(h)
        assert component_count(g) == nx.number_connected_components(h)
        assert is_bipartite(g) == nx.is_bipartite(h)
        assert is_planar(g).planar == nx.check_planarity(h)[0]
        expected_girth = nx.girth(h)
        assert girth(g) == (None if expected_girth == float("inf") else expected_girth)
        if nx.is_connected(h):
            assert vertex_connectivity(g) == nx.node_connectivity(h)


def test_vertex_connectivity_exhaustive(graphs_upto):
    for g in graphs_upto(7, 2):
        assert vertex_connectivity(g) == vertex_connectivity_bruteforce(g)


def test_bipartite_iff_two_colorable(graphs_upto):
    for g in graphs_upto(7, 2):
        assert is_bipartite(g) == (chromatic_number(g) <= 2)


def test_regular():
    assert is_regular(petersen()) == 3
    assert is_regular(double_wheel(5)) is None


def test_planarity_examples():
    assert is_planar(octahedron())
    assert is_planar(double_wheel(9))
    assert is_planar(cube())
    k5 = is_planar(complete(5))
    assert not k5 and k5.witness.kind == "K5"
    k33 = is_planar(complete_bipartite(3, 3))
    assert not k33 and k33.witness.kind == "K3,3"
    assert is_planar(petersen()).witness.kind == "K3,3"


def test_witness_is_subgraph_and_minimal():
    for g in (petersen(), complete(6), complete_bipartite(3, 4)):
        w = kuratowski_witness(g)
        assert set(w.edges) <= g.edges
        # removing any witness edge makes the witness planar
        for edge in w.edges:
            rest = build(g.n, [e for e in w.edges if e != edge])
            assert planar_by_path_addition(rest)


def test_blocks_partition_edges():
    g = disjoint_union(cycle(4), complete(4))
    g = build(g.n, sorted(g.edges) + [(3, 4)])
    blocks = biconnected_blocks(g)
    assert sorted(len(b) for b in blocks) == [1, 4, 6]
    assert sum(len(b) for b in blocks) == g.e


def test_planarity_against_kuratowski_oracle(graphs_upto):
    for g in graphs_upto(7):
        assert planar_by_path_addition(g) == (find_kuratowski_subdivision(g) is None)


@pytest.mark.slow
def test_planarity_against_kuratowski_oracle_n8(graphs_upto):
    for g in graphs_upto(8, 8):
        assert planar_by_path_addition(g) == (find_kuratowski_subdivision(g) is None)
