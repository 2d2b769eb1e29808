"""Immutable simple graphs, named families, and graph operators."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised for invalid graph construction or malformed graph input."""


Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is a frozenset of normalized pairs ``(i, j)`` with ``i < j``.
    Use :func:`build` rather than the constructor for unchecked input.
    """

    n: int
    edges: frozenset[Edge]

    @property
    def e(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks; bit ``j`` of ``masks[i]`` is edge ij."""
        out = [0] * self.n
        for i, j in self.edges:
            out[i] |= 1 << j
            out[j] |= 1 << i
        return tuple(out)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    @property
    def d_min(self) -> int:
        return min(self.degrees)

    @property
    def d_max(self) -> int:
        return max(self.degrees)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def is_complete(self) -> bool:
        return self.e == self.n * (self.n - 1) // 2

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled in the order given."""
        index = {v: k for k, v in enumerate(vertices)}
        return build(
            len(vertices),
            [(index[i], index[j]) for i, j in self.edges if i in index and j in index],
        )

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return build(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.e})"


def _normalize(n: int, edge_list: Iterable[Sequence[int]]) -> frozenset[Edge]:
    out: set[Edge] = set()
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} must have two endpoints")
        i, j = int(pair[0]), int(pair[1])
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) has an endpoint outside [0, {n})")
        if i == j:
            raise GraphError(f"loop at vertex {i}")
        out.add((i, j) if i < j else (j, i))
    return frozenset(out)


def build(n: int, edge_list: Iterable[Sequence[int]] = ()) -> Graph:
    """Validate and normalize an edge list into a :class:`Graph`.

    Duplicate edges collapse; loops and out-of-range endpoints raise.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    return Graph(n, _normalize(n, edge_list))


def from_masks(masks: Sequence[int]) -> Graph:
    n = len(masks)
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if masks[i] >> j & 1])


# --------------------------------------------------------------------------
# operators
# --------------------------------------------------------------------------


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return Graph(g1.n + g2.n, g1.edges | frozenset((i + off, j + off) for i, j in g2.edges))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    u = disjoint_union(g1, g2)
    cross = frozenset((i, g1.n + j) for i in range(g1.n) for j in range(g2.n))
    return Graph(u.n, u.edges | cross)


def complement(g: Graph) -> Graph:
    return Graph(g.n, frozenset(p for p in combinations(range(g.n), 2) if p not in g.edges))


# --------------------------------------------------------------------------
# vertex subsets
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class VertexSubset:
    """A proper nonempty vertex subset of a graph on ``n`` vertices."""

    members: frozenset[int]
    n: int

    def __post_init__(self) -> None:
        if not self.members:
            raise GraphError("vertex subset must be nonempty")
        if len(self.members) >= self.n:
            raise GraphError("vertex subset must be proper")
        if any(not 0 <= v < self.n for v in self.members):
            raise GraphError("vertex subset has an out-of-range member")

    @classmethod
    def of(cls, g: Graph, members: Iterable[int]) -> VertexSubset:
        return cls(frozenset(members), g.n)

    @property
    def m(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        out = 0
        for v in self.members:
            out |= 1 << v
        return out


def internal_degrees(g: Graph, h: VertexSubset) -> dict[int, int]:
    """Number of neighbours inside ``h`` for each member of ``h``."""
    return {v: len(g.adjacency[v] & h.members) for v in h.members}


def subset_degree(g: Graph, h: VertexSubset) -> int:
    """Sum over members of (degree - internal degree).

    This is the number of edges with exactly one end in ``h``.
    """
    if h.n != g.n:
        raise GraphError("subset belongs to a graph of different order")
    inner = internal_degrees(g, h)
    return sum(g.degrees[v] - inner[v] for v in h.members)


def edge_boundary(g: Graph, mask: int) -> int:
    """Edges leaving the vertex set encoded by ``mask`` (bitmask fast path)."""
    out = 0
    masks = g.masks
    outside = ~mask
    v = mask
    while v:
        low = v & -v
        out += (masks[low.bit_length() - 1] & outside).bit_count()
        v ^= low
    return out


# --------------------------------------------------------------------------
# named families
# --------------------------------------------------------------------------


def complete(n: int) -> Graph:
    return build(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    return build(n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """K_{1,n-1} centred at vertex 0."""
    return build(n, [(0, i) for i in range(1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("complete bipartite graph needs p, q >= 1")
    return build(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def double_wheel(n: int) -> Graph:
    """C_n joined with two independent hubs (hubs are ``n`` and ``n+1``)."""
    return join(cycle(n), empty(2))


def octahedron() -> Graph:
    """2K_1 joined with C_4; hubs are 0 and 1."""
    return join(empty(2), cycle(4))


def prism(n: int = 3) -> Graph:
    if n < 3:
        raise GraphError("prism needs n >= 3")
    top = [(i, (i + 1) % n) for i in range(n)]
    bottom = [(n + i, n + (i + 1) % n) for i in range(n)]
    rungs = [(i, n + i) for i in range(n)]
    return build(2 * n, top + bottom + rungs)


def cube() -> Graph:
    """Q_3 on 3-bit labels; edges join labels differing in one bit."""
    return build(8, [(i, i ^ (1 << b)) for i in range(8) for b in range(3)])


def wheel(n: int) -> Graph:
    return join(cycle(n), empty(1))


def near_complete(n: int) -> Graph:
    """K_n with a pendant vertex: (K_{n-1} + isolated x) joined with K_1.

    Vertex ``n-1`` is the hub that sees everything; ``n`` is the pendant,
    so the graph has ``n + 1`` vertices.
    """
    if n < 2:
        raise GraphError("near_complete needs n >= 2")
    base = disjoint_union(complete(n - 1), empty(1))
    g = join(base, empty(1))
    # relabel so the hub precedes the pendant: base = 0..n-2 clique, n-1 = x, n = hub
    perm = list(range(n - 1)) + [n, n - 1]
    return g.relabel(perm)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build(10, outer + inner + spokes)


_FAMILIES = {
    "complete": (complete, ("n",)),
    "cycle": (cycle, ("n",)),
    "path": (path, ("n",)),
    "empty": (empty, ("n",)),
    "star": (star, ("n",)),
    "complete_bipartite": (complete_bipartite, ("p", "q")),
    "double_wheel": (double_wheel, ("n",)),
    "wheel": (wheel, ("n",)),
    "octahedron": (octahedron, ()),
    "prism_3": (lambda: prism(3), ()),
    "prism": (prism, ("n",)),
    "cube": (cube, ()),
    "near_complete": (near_complete, ("n",)),
    "petersen": (petersen, ()),
}

SIZED_FAMILIES = tuple(name for name, (_, params) in _FAMILIES.items() if params == ("n",))


def family_names() -> list[str]:
    return list(_FAMILIES)


def family_params(name: str) -> tuple[str, ...]:
    if name not in _FAMILIES:
        raise GraphError(f"unknown family {name!r}")
    return _FAMILIES[name][1]


def family(name: str, **params: int) -> Graph:
    """Construct a named family member, e.g. ``family("cycle", n=5)``."""
    if name not in _FAMILIES:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(_FAMILIES)}")
    ctor, names = _FAMILIES[name]
    if set(params) != set(names):
        raise GraphError(f"family {name!r} takes parameters {names}, got {tuple(params)}")
    for key, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise GraphError(f"parameter {key} must be a positive integer")
    return ctor(**params)


# --------------------------------------------------------------------------
# edge-list text format
# --------------------------------------------------------------------------


def to_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.e}"]
    lines += [f"{i} {j}" for i, j in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def _data_lines(text: str) -> Iterator[list[str]]:
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line.split()


def from_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header followed by ``m`` lines of ``i j``."""
    rows = list(_data_lines(text))
    if not rows:
        raise GraphError("empty edge-list input")
    header = rows[0]
    if len(header) != 2:
        raise GraphError("edge-list header must be 'n m'")
    try:
        n, m = int(header[0]), int(header[1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge-list line: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges but {len(pairs)} were given")
    return build(n, pairs)
