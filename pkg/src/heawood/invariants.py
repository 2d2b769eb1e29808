"""Exact combinatorial invariants of small simple graphs."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph

INFINITE = None
"""Girth sentinel for acyclic graphs."""

DEFAULT_CHROMATIC_MAX_N = 30
DEFAULT_CHROMATIC_TIMEOUT = 60.0


class ResourceLimitError(RuntimeError):
    """An exact computation exceeded its configured size or time budget."""


class PreconditionError(ValueError):
    """Input violates an operation's precondition (e.g. disconnected graph)."""


# --------------------------------------------------------------------------
# connectivity
# --------------------------------------------------------------------------


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def component_count(g: Graph) -> int:
    return len(components(g))


def _reach_mask(masks: tuple[int, ...], start: int, allowed: int) -> int:
    reached = frontier = 1 << start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & allowed & ~reached
        reached |= frontier
    return reached


def is_connected(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return _reach_mask(g.masks, 0, full) == full


def connected_without(g: Graph, removed: int) -> bool:
    """Whether ``g`` minus the vertex set ``removed`` (bitmask) is connected."""
    allowed = ((1 << g.n) - 1) & ~removed
    if not allowed:
        return True
    start = (allowed & -allowed).bit_length() - 1
    return _reach_mask(g.masks, start, allowed) == allowed


# --------------------------------------------------------------------------
# girth
# --------------------------------------------------------------------------


def girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or ``INFINITE`` (None) for forests."""
    best = None
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for w in g.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def shortest_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every cycle of length girth(g), each listed once, smallest vertex first."""
    gl = girth(g)
    if gl is None:
        return []
    out = []
    adj = g.adjacency

    def extend(path: list[int], on_path: int) -> None:
        u = path[-1]
        if len(path) == gl:
            if path[0] in adj[u] and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in sorted(adj[u]):
            if w > path[0] and not on_path >> w & 1:
                path.append(w)
                extend(path, on_path | 1 << w)
                path.pop()

    for s in range(g.n):
        extend([s], 1 << s)
    return out


# --------------------------------------------------------------------------
# vertex connectivity
# --------------------------------------------------------------------------


def _local_vertex_connectivity(g: Graph, s: int, t: int, cap: int) -> int:
    """Max number of internally disjoint s-t paths, stopping at ``cap``.

    Unit-capacity flow on the split network: vertex v becomes v_in -> v_out.
    """
    n = g.n
    # node ids: v_in = 2v, v_out = 2v + 1
    residual: dict[int, dict[int, int]] = {x: {} for x in range(2 * n)}

    def add(u: int, w: int, c: int) -> None:
        residual[u][w] = residual[u].get(w, 0) + c
        residual[w].setdefault(u, 0)

    for v in range(n):
        add(2 * v, 2 * v + 1, n if v in (s, t) else 1)
    for i, j in g.edges:
        add(2 * i + 1, 2 * j, 1)
        add(2 * j + 1, 2 * i, 1)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cap:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            u = queue.popleft()
            for w, c in residual[u].items():
                if c > 0 and w not in prev:
                    prev[w] = u
                    queue.append(w)
        if sink not in prev:
            break
        w = sink
        while w != source:
            u = prev[w]
            residual[u][w] -= 1
            residual[w][u] += 1
            w = u
        flow += 1
    return flow


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertices whose removal disconnects ``g``.

    Complete graphs get the convention ``n - 1``.  Uses Even's scheme:
    some minimum separator misses one of the first k + 1 vertices, so
    only those need to act as flow sources.
    """
    if not is_connected(g):
        raise PreconditionError("vertex connectivity needs a connected graph")
    n = g.n
    if g.is_complete():
        return n - 1
    best = g.d_min
    i = 0
    while i <= best and i < n:
        for j in range(i + 1, n):
            if j not in g.adjacency[i]:
                best = min(best, _local_vertex_connectivity(g, i, j, best))
        i += 1
    return best


def vertex_connectivity_bruteforce(g: Graph) -> int:
    """Smallest separating vertex set by exhaustive search."""
    if not is_connected(g):
        raise PreconditionError("vertex connectivity needs a connected graph")
    n = g.n
    if g.is_complete():
        return n - 1
    for k in range(n - 1):
        for removed in combinations(range(n), k):
            mask = sum(1 << v for v in removed)
            if not connected_without(g, mask):
                return k
    return n - 1


# --------------------------------------------------------------------------
# chromatic number
# --------------------------------------------------------------------------


def chromatic_number(
    g: Graph,
    *,
    max_n: int = DEFAULT_CHROMATIC_MAX_N,
    timeout: float = DEFAULT_CHROMATIC_TIMEOUT,
) -> int:
    """Exact chromatic number by DSATUR branch and bound.

    Raises :class:`ResourceLimitError` past ``max_n`` vertices or
    ``timeout`` seconds rather than returning a heuristic value.
    """
    n = g.n
    if n > max_n:
        raise ResourceLimitError(f"chromatic number capped at n <= {max_n}, got n = {n}")
    if g.e == 0:
        return 1
    masks = g.masks
    deadline = time.monotonic() + timeout

    # greedy DSATUR colouring gives the initial upper bound
    colour = [-1] * n
    for _ in range(n):
        v = max(
            (u for u in range(n) if colour[u] < 0),
            key=lambda u: (len({colour[w] for w in g.adjacency[u]} - {-1}), g.degrees[u], -u),
        )
        used = {colour[w] for w in g.adjacency[v]}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    best = max(colour) + 1

    lower = _greedy_clique_size(g)
    if lower == best:
        return best

    colour = [-1] * n
    # per-vertex bitmask of colours present in the neighbourhood
    sat = [0] * n
    steps = 0

    def search(coloured: int, used: int) -> None:
        nonlocal best, steps
        if used >= best:
            return
        if coloured == n:
            best = used
            return
        steps += 1
        if steps & 1023 == 0 and time.monotonic() > deadline:
            raise ResourceLimitError(f"chromatic number exceeded {timeout} s")
        v = -1
        key = (-1, -1)
        for u in range(n):
            if colour[u] < 0:
                k = (sat[u].bit_count(), g.degrees[u])
                if k > key:
                    key, v = k, u
        for c in range(min(used + 1, best - 1)):
            if sat[v] >> c & 1:
                continue
            colour[v] = c
            touched = []
            m = masks[v]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if colour[w] < 0 and not sat[w] >> c & 1:
                    sat[w] |= 1 << c
                    touched.append(w)
            search(coloured + 1, max(used, c + 1))
            for w in touched:
                sat[w] &= ~(1 << c)
            colour[v] = -1
            if best <= lower:
                return

    search(0, 0)
    return best


def _greedy_clique_size(g: Graph) -> int:
    best = 1
    for v in range(g.n):
        clique = [v]
        cand = set(g.adjacency[v])
        while cand:
            w = max(cand, key=lambda u: (len(g.adjacency[u] & cand), -u))
            clique.append(w)
            cand &= g.adjacency[w]
        best = max(best, len(clique))
    return best


# --------------------------------------------------------------------------
# degree structure
# --------------------------------------------------------------------------


def is_regular(g: Graph) -> int | None:
    """The common degree if ``g`` is regular, else None."""
    return g.degrees[0] if g.d_min == g.d_max else None


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool
    witness: "KuratowskiWitness | None" = None

    def __bool__(self) -> bool:
        return self.planar


from .planarity import KuratowskiWitness, is_planar  # noqa: E402, F401
