import pytest

from heawood.graph import (
    GraphError,
    VertexSubset,
    build,
    complement,
    complete,
    complete_bipartite,
    cube,
    cycle,
    disjoint_union,
    double_wheel,
    edge_boundary,
    empty,
    family,
    family_names,
    from_edge_list,
    join,
    near_complete,
    octahedron,
    path,
    petersen,
    prism,
    star,
    subset_degree,
    to_edge_list,
    wheel,
)
from heawood.invariants import is_regular


def test_build_normalizes_and_dedups():
    g = build(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.e == 2
    assert g.degrees == (1, 2, 1)


@pytest.mark.parametrize("n, edges", [(0, []), (3, [(1, 1)]), (3, [(0, 3)]), (2, [(-1, 0)])])
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build(n, edges)


def test_masks_match_adjacency():
    g = petersen()
    for v in range(g.n):
        assert {u for u in range(g.n) if g.masks[v] >> u & 1} == set(g.adjacency[v])


@pytest.mark.parametrize(
    "g, n, e, degree",
    [
        (complete(5), 5, 10, 4),
        (cycle(7), 7, 7, 2),
        (octahedron(), 6, 12, 4),
        (prism(3), 6, 9, 3),
        (cube(), 8, 12, 3),
        (petersen(), 10, 15, 3),
        (complete_bipartite(3, 3), 6, 9, 3),
    ],
)
def test_regular_families(g, n, e, degree):
    assert (g.n, g.e, is_regular(g)) == (n, e, degree)


def test_irregular_families():
    assert path(5).e == 4
    assert star(5).n == 5 and star(5).d_max == 4
    dw = double_wheel(5)
    assert dw.n == 7 and dw.e == 5 + 10
    assert wheel(5).n == 6 and wheel(5).e == 10
    nc = near_complete(5)
    assert nc.n == 6 and nc.e == 11 and sorted(nc.degrees) == [1, 4, 4, 4, 4, 5]


def test_join_and_union():
    g = join(empty(2), cycle(4))
    assert g == octahedron()
    u = disjoint_union(complete(3), complete(2))
    assert u.n == 5 and u.e == 4 and not u.has_edge(0, 3)


def test_complement_involution():
    g = petersen()
    assert complement(complement(g)) == g
    assert g.e + complement(g).e == 45


def test_subset_degree_is_edge_boundary():
    g = double_wheel(6)
    for mask in range(1, (1 << g.n) - 1, 7):
        h = VertexSubset(frozenset(v for v in range(g.n) if mask >> v & 1), g.n)
        assert subset_degree(g, h) == edge_boundary(g, h.mask)


@pytest.mark.parametrize("members", [set(), {0, 1, 2, 3}, {5}])
def test_subset_must_be_proper(members):
    with pytest.raises(GraphError):
        VertexSubset(frozenset(members), 4)


def test_family_lookup():
    assert family("cycle", n=5) == cycle(5)
    assert family("complete_bipartite", p=2, q=3).e == 6
    assert "octahedron" in family_names()
    with pytest.raises(GraphError):
        family("nope")
    with pytest.raises(GraphError):
        family("cycle")


def test_edge_list_round_trip():
    g = petersen()
    assert from_edge_list(to_edge_list(g)) == g
    text = "# a triangle\n3 3\n0 1\n1 2  # spoke\n0 2\n"
    assert from_edge_list(text) == complete(3)


@pytest.mark.parametrize("text", ["", "3\n0 1", "3 2\n0 1", "3 1\n0 x", "2 1\n0 5"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        from_edge_list(text)
