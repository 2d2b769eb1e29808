"""Canonical labelling of small graphs.

Two independent canonical forms:

* :func:`lexmin_code` - the lexicographically smallest upper-triangle bit
  string over *all* vertex permutations (exact, brute force, n <= 8).
* :func:`certificate` - individualization/refinement search over ordered
  equitable partitions, taking the smallest code among the leaves.

Codes are integers whose binary expansion, most significant bit first, is
the graph6 bit order ``(0,1), (0,2), (1,2), (0,3), ...``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Sequence

import numpy as np

from .graph import Graph, from_masks

BRUTE_MAX_N = 8


def slot(i: int, j: int) -> int:
    """Index of pair (i, j), i < j, in graph6 bit order."""
    return j * (j - 1) // 2 + i


def code_of(masks: Sequence[int], order: Sequence[int]) -> int:
    """Code of the graph relabelled so that ``order[k]`` becomes vertex k."""
    out = 0
    for j in range(1, len(order)):
        row = masks[order[j]]
        for i in range(j):
            out = out << 1 | (row >> order[i] & 1)
    return out


def masks_from_code(code: int, n: int) -> tuple[int, ...]:
    total = n * (n - 1) // 2
    masks = [0] * n
    for j in range(1, n):
        for i in range(j):
            if code >> (total - 1 - slot(i, j)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return tuple(masks)


def graph_from_code(code: int, n: int) -> Graph:
    return from_masks(masks_from_code(code, n))


# --------------------------------------------------------------------------
# brute force
# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def permutation_weights(n: int) -> np.ndarray:
    """``W[p, s]``: the code bit that slot ``s`` lands on under permutation p."""
    total = n * (n - 1) // 2
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    perms = list(permutations(range(n)))
    w = np.zeros((len(perms), total), dtype=np.int64)
    for p, perm in enumerate(perms):
        for s, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            w[p, s] = 1 << (total - 1 - slot(a, b))
    return w


def all_codes(code: int, n: int) -> np.ndarray:
    """Codes of every relabelling of the graph with the given code."""
    total = n * (n - 1) // 2
    present = [s for s in range(total) if code >> (total - 1 - s) & 1]
    w = permutation_weights(n)
    if not present:
        return np.zeros(w.shape[0], dtype=np.int64)
    return w[:, present].sum(axis=1)


def lexmin_code(g: Graph) -> int:
    if g.n > BRUTE_MAX_N:
        raise ValueError(f"brute-force canonical form limited to n <= {BRUTE_MAX_N}")
    if g.n == 1:
        return 0
    return int(all_codes(code_of(g.masks, range(g.n)), g.n).min())


# --------------------------------------------------------------------------
# partition refinement
# --------------------------------------------------------------------------


def _refine(masks: Sequence[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Coarsest equitable refinement, splitting cells in a label-free order."""
    k = 0
    while k < len(cells):
        wmask = 0
        for v in cells[k]:
            wmask |= 1 << v
        out: list[tuple[int, ...]] = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((masks[v] & wmask).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                split = True
                out.extend(tuple(groups[c]) for c in sorted(groups))
        if split:
            cells = out
            k = 0
        else:
            k += 1
    return cells


def _transposition_is_automorphism(masks: Sequence[int], u: int, w: int) -> bool:
    both = (1 << u) | (1 << w)
    return masks[u] & ~both == masks[w] & ~both


def canonical_order(masks: Sequence[int]) -> tuple[int, ...]:
    """Vertex order whose code is the certificate of the graph."""
    n = len(masks)
    if n <= 1:
        return tuple(range(n))
    best: list = [None, None]

    def search(cells: list[tuple[int, ...]]) -> None:
        cells = _refine(masks, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = tuple(c[0] for c in cells)
            code = code_of(masks, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        first = cell[0]
        for v in cell:
            if v != first and _transposition_is_automorphism(masks, first, v):
                continue
            rest = tuple(x for x in cell if x != v)
            search(cells[:target] + [(v,), rest] + cells[target + 1 :])

    search([tuple(range(n))])
    return best[1]


def certificate(masks: Sequence[int]) -> int:
    return code_of(masks, canonical_order(masks))


def canonical_form(g: Graph) -> Graph:
    """Relabelled copy of ``g``; isomorphic graphs give identical results."""
    order = canonical_order(g.masks)
    return from_masks(masks_from_code(code_of(g.masks, order), g.n))


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.e != g2.e or sorted(g1.degrees) != sorted(g2.degrees):
        return False
    return certificate(g1.masks) == certificate(g2.masks)
