"""Exact planarity testing.

The main test embeds each biconnected block by path addition: start from a
cycle, then repeatedly route a path of some fragment through a face that
contains all of the fragment's attachment vertices.  A fragment with no
admissible face proves the block nonplanar.

``find_kuratowski_subdivision`` is an independent exhaustive search used
to cross-check the main test on small graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Edge, Graph, build


@dataclass(frozen=True)
class KuratowskiWitness:
    """A subdivision of K_5 or K_{3,3} contained in the graph."""

    kind: str  # "K5" or "K3,3"
    branch_vertices: tuple[int, ...]
    edges: tuple[Edge, ...]

    def describe(self) -> str:
        return f"{self.kind} subdivision on branch vertices {list(self.branch_vertices)}"


def biconnected_blocks(g: Graph) -> list[list[Edge]]:
    """Edge sets of the biconnected components (Hopcroft-Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[Edge]] = []
    stack: list[Edge] = []
    counter = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = counter
        counter += 1
        it_stack = [(root, -1, iter(sorted(g.adjacency[root])))]
        while it_stack:
            u, parent, it = it_stack[-1]
            advanced = False
            for w in it:
                if disc[w] < 0:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((u, w))
                    it_stack.append((w, u, iter(sorted(g.adjacency[w]))))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[u]:
                    stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            it_stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block = []
                    while True:
                        edge = stack.pop()
                        block.append(edge)
                        if edge == (parent, u):
                            break
                    blocks.append(block)
    return blocks


def _find_cycle(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    parent = {start: None}
    order = [start]
    stack = [(start, iter(sorted(adj[start])))]
    while stack:
        u, it = stack[-1]
        for w in it:
            if w == parent[u]:
                continue
            if w in parent:
                # back edge u-w closes a cycle along the DFS tree path
                cyc = [u]
                x = u
                while x != w:
                    x = parent[x]
                    cyc.append(x)
                return cyc
            parent[w] = u
            order.append(w)
            stack.append((w, iter(sorted(adj[w]))))
            break
        else:
            stack.pop()
    raise ValueError("block has no cycle")


def _block_is_planar(block: list[Edge]) -> bool:
    verts = sorted({v for e in block for v in e})
    nv, ne = len(verts), len(block)
    if nv <= 4 or ne <= nv + 2:
        return True
    if ne > 3 * nv - 6:
        return False
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for i, j in block:
        adj[i].add(j)
        adj[j].add(i)

    cyc = _find_cycle(adj)
    emb_v = set(cyc)
    emb_e = {frozenset((cyc[k], cyc[(k + 1) % len(cyc)])) for k in range(len(cyc))}
    faces = [list(cyc), list(cyc)]

    while len(emb_e) < ne:
        fragments = []  # (attachments, path-finder data)
        for i, j in block:
            if i in emb_v and j in emb_v and frozenset((i, j)) not in emb_e:
                fragments.append(({i, j}, None))
        seen: set[int] = set()
        for v in verts:
            if v in emb_v or v in seen:
                continue
            comp = {v}
            queue = deque([v])
            attach: set[int] = set()
            while queue:
                u = queue.popleft()
                for w in adj[u]:
                    if w in emb_v:
                        attach.add(w)
                    elif w not in comp:
                        comp.add(w)
                        queue.append(w)
            seen |= comp
            fragments.append((attach, comp))

        choice = None
        for attach, comp in fragments:
            admissible = [k for k, f in enumerate(faces) if attach <= set(f)]
            if not admissible:
                return False
            if choice is None or len(admissible) == 1:
                choice = (attach, comp, admissible[0])
                if len(admissible) == 1:
                    break
        assert choice is not None
        attach, comp, fk = choice

        if comp is None:
            a, b = sorted(attach)
            route = [a, b]
        else:
            route = _fragment_path(adj, attach, comp)

        face = faces.pop(fk)
        a, b = route[0], route[-1]
        ia, ib = face.index(a), face.index(b)
        if ia <= ib:
            arc_ab, arc_ba = face[ia : ib + 1], face[ib:] + face[: ia + 1]
        else:
            arc_ab, arc_ba = face[ia:] + face[: ib + 1], face[ib : ia + 1]
        inner = route[1:-1]
        faces.append(arc_ab + inner[::-1])
        faces.append(arc_ba + inner)
        emb_v.update(inner)
        for k in range(len(route) - 1):
            emb_e.add(frozenset((route[k], route[k + 1])))
    return True


def _fragment_path(adj: dict[int, set[int]], attach: set[int], comp: set[int]) -> list[int]:
    """Path from one attachment vertex to another through the fragment interior."""
    a = min(attach)
    prev: dict[int, int] = {}
    queue = deque()
    for w in sorted(adj[a]):
        if w in comp and w not in prev:
            prev[w] = a
            queue.append(w)
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w in attach and w != a:
                out = [w, u]
                while out[-1] != a:
                    out.append(prev[out[-1]])
                return out[::-1]
            if w in comp and w not in prev:
                prev[w] = u
                queue.append(w)
    raise AssertionError("fragment of a biconnected block has a single attachment")


def planar_by_path_addition(g: Graph) -> bool:
    if g.n >= 3 and g.e > 3 * g.n - 6:
        return False
    return all(_block_is_planar(block) for block in biconnected_blocks(g))


def _classify(sub: Graph) -> KuratowskiWitness:
    deg = sub.degrees
    branch = tuple(v for v in range(sub.n) if deg[v] >= 3)
    kind = "K5" if len(branch) == 5 and all(deg[v] == 4 for v in branch) else "K3,3"
    return KuratowskiWitness(kind, branch, tuple(sub.sorted_edges()))


def kuratowski_witness(g: Graph) -> KuratowskiWitness:
    """Edge-minimal nonplanar subgraph, classified as a K5 or K3,3 subdivision."""
    if planar_by_path_addition(g):
        raise ValueError("graph is planar")
    kept = g.sorted_edges()
    k = 0
    while k < len(kept):
        trial = kept[:k] + kept[k + 1 :]
        if not planar_by_path_addition(build(g.n, trial)):
            kept = trial
        else:
            k += 1
    return _classify(build(g.n, kept))


def is_planar(g: Graph, *, witness: bool = True):
    """Exact planarity verdict; nonplanar verdicts carry a Kuratowski witness."""
    from .invariants import PlanarityVerdict

    if planar_by_path_addition(g):
        return PlanarityVerdict(True)
    return PlanarityVerdict(False, kuratowski_witness(g) if witness else None)


# --------------------------------------------------------------------------
# exhaustive subdivision search (oracle)
# --------------------------------------------------------------------------


def _route_pairs(
    masks: tuple[int, ...],
    pairs: list[tuple[int, int]],
    free: int,
) -> bool:
    """Can every pair be joined by a path whose interior uses distinct free vertices?"""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]
    if masks[a] >> b & 1 and _route_pairs(masks, rest, free):
        return True

    def walk(u: int, avail: int) -> bool:
        nxt = masks[u] & avail
        while nxt:
            low = nxt & -nxt
            nxt ^= low
            w = low.bit_length() - 1
            left = avail & ~low
            if masks[w] >> b & 1 and _route_pairs(masks, rest, left):
                return True
            if walk(w, left):
                return True
        return False

    return walk(a, free)


def find_kuratowski_subdivision(g: Graph, *, max_n: int = 10) -> KuratowskiWitness | None:
    """Search every branch-vertex placement for a K5 or K3,3 subdivision.

    Exponential; intended as an oracle for small graphs only.
    """
    if g.n > max_n:
        raise ValueError(f"exhaustive subdivision search limited to n <= {max_n}")
    masks = g.masks
    deg = g.degrees
    full = (1 << g.n) - 1
    hubs4 = [v for v in range(g.n) if deg[v] >= 4]
    for branch in combinations(hubs4, 5):
        bmask = sum(1 << v for v in branch)
        if _route_pairs(masks, list(combinations(branch, 2)), full & ~bmask):
            return KuratowskiWitness("K5", branch, ())
    hubs3 = [v for v in range(g.n) if deg[v] >= 3]
    for six in combinations(hubs3, 6):
        bmask = sum(1 << v for v in six)
        first = six[0]
        for mates in combinations(six[1:], 2):
            left = (first,) + mates
            right = tuple(v for v in six if v not in left)
            pairs = [(x, y) for x in left for y in right]
            if _route_pairs(masks, pairs, full & ~bmask):
                return KuratowskiWitness("K3,3", left + right, ())
    return None
