"""Isomorphism-free generation of small graphs and theorem/conjecture sweeps."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from multiprocessing import get_context
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from . import graph6
from .canon import (
    all_codes,
    are_isomorphic,
    certificate,
    graph_from_code,
    masks_from_code,
)
from .graph import Graph, GraphError, complete, from_masks, octahedron
from .invariants import (
    chromatic_number,
    is_bipartite,
    is_planar,
    is_regular,
    vertex_connectivity,
)
from .spectral import algebraic_connectivity

log = logging.getLogger(__name__)

MAX_N = 9
BRUTE_FORCE_MAX_N = 7
CUBIC_MAX_N = 14
TOL = 1e-6

# connected graphs on n = 1..9 vertices, up to isomorphism
CONNECTED_COUNTS = (1, 1, 2, 6, 21, 112, 853, 11117, 261080)


class EnumerationError(ValueError):
    pass


# --------------------------------------------------------------------------
# generation
# --------------------------------------------------------------------------


def _connected_code(code: int, n: int) -> bool:
    masks = masks_from_code(code, n)
    full = (1 << n) - 1
    reached = frontier = 1
    while frontier:
        nxt = 0
        for v in range(n):
            if frontier >> v & 1:
                nxt |= masks[v]
        frontier = nxt & full & ~reached
        reached |= frontier
    return reached == full


@lru_cache(maxsize=None)
def connected_codes_bruteforce(n: int) -> tuple[int, ...]:
    """Lexicographically minimal codes of connected graphs, by brute force.

    Walks every labelled graph once; each new connected class marks all of
    its relabellings as seen.
    """
    if not 1 <= n <= BRUTE_FORCE_MAX_N:
        raise EnumerationError(f"brute-force generation supports 1 <= n <= {BRUTE_FORCE_MAX_N}")
    if n == 1:
        return (0,)
    total = n * (n - 1) // 2
    seen = np.zeros(1 << total, dtype=bool)
    reps = []
    for code in range(1 << total):
        if seen[code]:
            continue
        if not _connected_code(code, n):
            continue
        images = all_codes(code, n)
        seen[images] = True
        reps.append(int(images.min()))
    return tuple(sorted(reps))


def _augment(parents: Iterable[tuple[int, ...]], n: int) -> list[tuple[int, ...]]:
    """Connected graphs on n vertices from connected parents on n - 1.

    Every connected graph has a non-cut vertex of maximum degree among
    non-cut vertices; deleting it leaves a connected parent.  Children in
    which the new vertex is not such a vertex are skipped before the
    (expensive) certificate is computed.
    """
    new = n - 1
    found: dict[int, tuple[int, ...]] = {}
    for parent in parents:
        for nbrs in range(1, 1 << new):
            k = nbrs.bit_count()
            child = [
                parent[v] | (1 << new) if nbrs >> v & 1 else parent[v] for v in range(new)
            ]
            child.append(nbrs)
            reject = False
            for v in range(new):
                if child[v].bit_count() > k:
                    # a higher-degree non-cut vertex would have been deleted instead
                    if _is_noncut(child, v):
                        reject = True
                        break
            if reject:
                continue
            cert = certificate(child)
            if cert not in found:
                found[cert] = tuple(child)
    return [masks_from_code(c, n) for c in sorted(found)]


def _is_noncut(masks: list[int], v: int) -> bool:
    n = len(masks)
    allowed = ((1 << n) - 1) & ~(1 << v)
    start = (allowed & -allowed).bit_length() - 1
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
    return reached == allowed


def _default_method(n: int) -> str:
    return "bruteforce" if n <= BRUTE_FORCE_MAX_N else "augment"


@lru_cache(maxsize=None)
def _level(n: int, method: str) -> tuple[Graph, ...]:
    if method == "bruteforce":
        return tuple(graph_from_code(c, n) for c in connected_codes_bruteforce(n))
    if method == "augment":
        if n == 1:
            return (from_masks((0,)),)
        parents = [g.masks for g in _level(n - 1, _default_method(n - 1))]
        return tuple(from_masks(m) for m in _augment(parents, n))
    raise EnumerationError(f"unknown generation method {method!r}")


def _sorted_by_graph6(graphs: Iterable[Graph]) -> tuple[Graph, ...]:
    return tuple(sorted(graphs, key=graph6.encode))


@lru_cache(maxsize=None)
def connected_graphs(n: int, method: str = "auto") -> tuple[Graph, ...]:
    """One labelled representative per isomorphism class, sorted by graph6.

    ``auto`` uses brute force up to n = 7 and vertex augmentation beyond.
    """
    if not 1 <= n <= MAX_N:
        raise EnumerationError(f"generation supports 1 <= n <= {MAX_N}, got {n}")
    if method == "auto":
        method = _default_method(n)
    return _sorted_by_graph6(_level(n, method))


def generate_connected(n: int, method: str = "auto") -> Iterator[Graph]:
    yield from connected_graphs(n, method)


def generate_cubic(n: int) -> list[Graph]:
    """Connected cubic graphs on n vertices up to isomorphism, sorted by graph6.

    Backtracking fills each vertex's remaining degree from later vertices.
    Untouched vertices are interchangeable, so only the lowest-numbered
    untouched ones are ever chosen; duplicates are removed by certificate.
    """
    if n % 2 or n < 4 or n > CUBIC_MAX_N:
        raise EnumerationError(f"cubic generation needs even 4 <= n <= {CUBIC_MAX_N}")
    deg = [0] * n
    masks = [0] * n
    found: dict[int, tuple[int, ...]] = {}

    def fill(v: int) -> None:
        while v < n and deg[v] == 3:
            v += 1
        if v == n:
            if _connected_masks(masks):
                cert = certificate(masks)
                if cert not in found:
                    found[cert] = tuple(masks)
            return
        need = 3 - deg[v]
        touched = [w for w in range(v + 1, n) if 0 < deg[w] < 3]
        fresh = [w for w in range(v + 1, n) if deg[w] == 0]
        for t in range(max(0, need - len(fresh)), min(need, len(touched)) + 1):
            for picked in combinations(touched, t):
                chosen = list(picked) + fresh[: need - t]
                for w in chosen:
                    masks[v] |= 1 << w
                    masks[w] |= 1 << v
                    deg[w] += 1
                deg[v] = 3
                fill(v + 1)
                deg[v] = 3 - need
                for w in chosen:
                    masks[v] &= ~(1 << w)
                    masks[w] &= ~(1 << v)
                    deg[w] -= 1

    fill(0)
    return list(_sorted_by_graph6(from_masks(m) for m in found.values()))


def _connected_masks(masks: Sequence[int]) -> bool:
    n = len(masks)
    full = (1 << n) - 1
    reached = frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= masks[low.bit_length() - 1]
            f ^= low
        frontier = nxt & full & ~reached
        reached |= frontier
    return reached == full


def read_graph6_file(path: str) -> list[Graph]:
    with open(path, encoding="ascii") as fh:
        return list(graph6.read_lines(fh))


# --------------------------------------------------------------------------
# filters
# --------------------------------------------------------------------------


def parse_filter(text: str) -> Callable[[Graph], bool]:
    key = text.strip().lower().replace(" ", "")
    if key == "planar":
        return lambda g: is_planar(g, witness=False).planar
    if key == "bipartite":
        return is_bipartite
    if key == "regular":
        return lambda g: is_regular(g) is not None
    if key == "cubic":
        return lambda g: is_regular(g) == 3
    for prefix in ("dmax<=", "dmax:", "d_max<=", "dmax="):
        if key.startswith(prefix):
            try:
                k = int(key[len(prefix) :])
            except ValueError:
                break
            return lambda g, k=k: g.d_max <= k
    raise EnumerationError(f"unknown filter {text!r}; use planar, bipartite, regular, cubic or dmax<=k")


# --------------------------------------------------------------------------
# predicates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    """Outcome of one predicate on one graph."""

    holds: bool
    a: float
    bound: float
    extremal: bool


_K4 = complete(4)
_OCTAHEDRON = octahedron()


def _is_conjecture1_extremal(g: Graph) -> bool:
    return any(g.n == h.n and are_isomorphic(g, h) for h in (_K4, _OCTAHEDRON))


def _planar(g: Graph) -> bool:
    return is_planar(g, witness=False).planar


def _cap(g: Graph, cap: float) -> Check:
    a = algebraic_connectivity(g)
    return Check(a <= cap + TOL, a, cap, abs(a - cap) <= TOL)


def _p_conjecture1(g: Graph) -> Check | None:
    if g.n < 2 or not _planar(g):
        return None
    a = algebraic_connectivity(g)
    at_cap = abs(a - 4) <= TOL
    holds = a <= 4 + TOL and (not at_cap or _is_conjecture1_extremal(g))
    return Check(holds, a, 4.0, at_cap)


def _p_conjecture2(g: Graph) -> Check | None:
    if g.n < 2 or not is_bipartite(g) or not _planar(g):
        return None
    return _cap(g, 2.0)


def _p_fiedler(g: Graph) -> Check | None:
    if g.n < 2 or g.is_complete():
        return None
    a = algebraic_connectivity(g)
    v = vertex_connectivity(g)
    holds = a <= v + TOL and v <= g.d_min and g.d_min * g.n <= 2 * g.e
    return Check(holds, a, float(v), abs(a - v) <= TOL)


def _p_dmax5(g: Graph) -> Check | None:
    if g.n < 2 or g.d_max > 5 or not _planar(g):
        return None
    return _cap(g, 4.0)


def _p_cubic(g: Graph) -> Check | None:
    if is_regular(g) != 3 or g.n == 4 or not _planar(g):
        return None
    return _cap(g, 2.0)


def _p_chromatic(g: Graph) -> Check | None:
    if g.n < 2 or g.is_complete():
        return None
    k = chromatic_number(g)
    return _cap(g, float(g.n - -(-g.n // k)))


def _p_cut(g: Graph) -> Check | None:
    if g.n < 2:
        return None
    from .bounds import all_cut_bounds

    _, values = all_cut_bounds(g)
    return _cap(g, float(values.min()))


def _p_verdict(g: Graph) -> Check | None:
    if g.n < 2:
        return None
    from .bounds import verdict

    report = verdict(g)
    a = report.a_computed
    values = [x.value for x in report.entries if x.applicable]
    if not values:
        return None
    bound = min(values)
    return Check(all(v >= a - TOL for v in values), a, bound, abs(a - bound) <= TOL)


PREDICATES: dict[str, Callable[[Graph], Check | None]] = {
    "conjecture1_planar_cap": _p_conjecture1,
    "conjecture2_planar_bipartite": _p_conjecture2,
    "fiedler_chain_holds": _p_fiedler,
    "planar_dmax5_cap": _p_dmax5,
    "planar_cubic_cap": _p_cubic,
    "chromatic_bound_holds": _p_chromatic,
    "cut_bound_universal": _p_cut,
    "verdict_sound": _p_verdict,
}

# conjecture predicates gather evidence; the rest follow from proved theorems
CONJECTURES = frozenset(
    {"conjecture1_planar_cap", "conjecture2_planar_bipartite"}
)


# --------------------------------------------------------------------------
# sweeps
# --------------------------------------------------------------------------


@dataclass
class SweepReport:
    predicate: str
    n_max: int
    filters: list[str]
    checked: int = 0
    counterexamples: list[str] = field(default_factory=list)
    extremal: list[dict] = field(default_factory=list)

    @property
    def is_conjecture(self) -> bool:
        return self.predicate in CONJECTURES

    def to_dict(self) -> dict:
        return {
            "predicate": self.predicate,
            "n_max": self.n_max,
            "filters": list(self.filters),
            "checked": self.checked,
            "counterexamples": list(self.counterexamples),
            "extremal": list(self.extremal),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _sig12(x: float) -> float:
    return float(f"{x:.12g}")


def _evaluate_chunk(args: tuple[str, list[str], list[str]]) -> list[tuple[str, Check] | None]:
    predicate_id, filters, codes = args
    pred = PREDICATES[predicate_id]
    tests = [parse_filter(f) for f in filters]
    out: list[tuple[str, Check] | None] = []
    for text in codes:
        g = graph6.decode(text)
        if not all(t(g) for t in tests):
            out.append(None)
            continue
        check = pred(g)
        out.append((text, check) if check is not None else None)
    return out


def _chunks(items: list[str], size: int) -> list[list[str]]:
    return [items[k : k + size] for k in range(0, len(items), size)]


def sweep_graphs(
    predicate_id: str,
    graphs: Iterable[Graph],
    *,
    n_max: int,
    filters: Sequence[str] = (),
    workers: int = 1,
    chunk_size: int = 256,
) -> SweepReport:
    """Run a predicate over an explicit graph stream.

    Results are merged in input order, so the report does not depend on
    the worker count.
    """
    if predicate_id not in PREDICATES:
        raise EnumerationError(f"unknown predicate {predicate_id!r}; known: {', '.join(PREDICATES)}")
    filters = list(filters)
    for f in filters:
        parse_filter(f)
    codes = [graph6.encode(g) for g in graphs]
    jobs = [(predicate_id, filters, chunk) for chunk in _chunks(codes, chunk_size)]
    if workers > 1 and len(jobs) > 1:
        with get_context("spawn").Pool(workers) as pool:
            results = pool.map(_evaluate_chunk, jobs, chunksize=1)
    else:
        results = [_evaluate_chunk(job) for job in jobs]

    report = SweepReport(predicate_id, n_max, filters)
    for chunk in results:
        for item in chunk:
            if item is None:
                continue
            text, check = item
            report.checked += 1
            if not check.holds:
                report.counterexamples.append(text)
            if check.extremal:
                report.extremal.append(
                    {"g6": text, "a": _sig12(check.a), "bound": _sig12(check.bound)}
                )
    if report.counterexamples:
        level = logging.WARNING if report.is_conjecture else logging.ERROR
        log.log(
            level,
            "%s: %d counterexample(s) found%s",
            predicate_id,
            len(report.counterexamples),
            " - conjecture evidence, verify independently" if report.is_conjecture else
            " - contradicts a proved theorem, implementation bug suspected",
        )
    return report


def sweep(
    predicate_id: str,
    n_max: int,
    filters: Sequence[str] = (),
    *,
    workers: int = 1,
    n_min: int = 1,
) -> SweepReport:
    """Check a predicate on every connected graph with n_min <= n <= n_max."""
    if predicate_id not in PREDICATES:
        raise EnumerationError(f"unknown predicate {predicate_id!r}; known: {', '.join(PREDICATES)}")
    if not 1 <= n_max <= MAX_N:
        raise EnumerationError(f"n_max must be in 1..{MAX_N}, got {n_max}")
    graphs = [g for n in range(n_min, n_max + 1) for g in connected_graphs(n)]
    return sweep_graphs(predicate_id, graphs, n_max=n_max, filters=filters, workers=workers)


def recheck(report: SweepReport) -> bool:
    """Re-decode every counterexample and confirm it still fails."""
    pred = PREDICATES[report.predicate]
    for text in report.counterexamples:
        check = pred(graph6.decode(text))
        if check is None or check.holds:
            return False
    return True


# --------------------------------------------------------------------------
# trends
# --------------------------------------------------------------------------


def _cycle_a(n: int) -> float:
    return 2 - 2 * math.cos(2 * math.pi / n)


# closed forms used as independent checks on computed trends
CLOSED_FORMS: dict[str, Callable[[int], float]] = {
    "cycle": _cycle_a,
    "complete": float,
    "path": lambda n: 2 - 2 * math.cos(math.pi / n),
    "star": lambda n: 1.0 if n > 2 else 2.0,
    "double_wheel": lambda n: min(_cycle_a(n) + 2, n),
    "wheel": lambda n: min(_cycle_a(n) + 1, n),
    "near_complete": lambda n: 1.0,
}

_TREND_MIN = {"cycle": 3, "double_wheel": 3, "wheel": 3, "near_complete": 2, "prism": 3}


def trend(family_id: str, n_range: Iterable[int]) -> list[tuple[int, float]]:
    """Algebraic connectivity along a size-parameterized family."""
    from .graph import SIZED_FAMILIES, family

    if family_id not in SIZED_FAMILIES:
        raise EnumerationError(f"family {family_id!r} is not size-parameterized; use one of {SIZED_FAMILIES}")
    out = []
    for n in n_range:
        if n < _TREND_MIN.get(family_id, 2):
            raise GraphError(f"{family_id} needs n >= {_TREND_MIN.get(family_id, 2)}")
        out.append((n, algebraic_connectivity(family(family_id, n=n))))
    return out
