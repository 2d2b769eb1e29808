"""Upper bounds on algebraic connectivity and the verdict engine.

Each evaluator raises :class:`Inapplicable` when its hypotheses fail, so
the verdict can record *why* a bound does not apply instead of dropping it.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from . import graph6
from .graph import Graph, GraphError, VertexSubset, subset_degree
from . import invariants, spectral
from .invariants import (
    PreconditionError,
    ResourceLimitError,
    is_bipartite,
    is_connected,
    is_regular,
    shortest_cycles,
)
from .spectral import fiedler_vector
from .surfaces import (
    SPHERE,
    Surface,
    cook_number,
    cook_planar_girth_cap,
    euler_edge_bound,
    maximal_complete_graph,
)

TIGHT_TOL = 1e-6
EXHAUSTIVE_MAX_N = 16

# verdicts query the same invariants from several bounds; graphs are hashable
_CACHE = 4096


@lru_cache(maxsize=_CACHE)
def _planar(g: Graph) -> bool:
    return invariants.is_planar(g, witness=False).planar


def is_planar(g: Graph, witness: bool = False):
    return invariants.is_planar(g, witness=witness) if witness else invariants.PlanarityVerdict(_planar(g))


girth = lru_cache(maxsize=_CACHE)(invariants.girth)
vertex_connectivity = lru_cache(maxsize=_CACHE)(invariants.vertex_connectivity)
chromatic_number = lru_cache(maxsize=_CACHE)(invariants.chromatic_number)
algebraic_connectivity = lru_cache(maxsize=_CACHE)(spectral.algebraic_connectivity)


class Inapplicable(ValueError):
    """A bound's hypotheses do not hold for the given input."""


@dataclass(frozen=True)
class SurfaceContext:
    """Surface a graph is assumed to embed in, and where that came from."""

    surface: Surface | None
    source: str  # "given", "planarity-derived" or "none"

    @classmethod
    def given(cls, surface: Surface) -> SurfaceContext:
        return cls(surface, "given")

    @classmethod
    def auto(cls, g: Graph) -> SurfaceContext:
        """Sphere when planar; otherwise no surface (never guess a genus)."""
        if is_planar(g, witness=False):
            return cls(SPHERE, "planarity-derived")
        return cls(None, "none")


def _require_surface(ctx: SurfaceContext | None) -> Surface:
    if ctx is None or ctx.surface is None:
        raise Inapplicable("no surface context")
    return ctx.surface


def _require_noncomplete(g: Graph) -> None:
    if g.is_complete():
        raise Inapplicable("graph is complete")


def _require_planar(g: Graph) -> None:
    if not is_planar(g, witness=False):
        raise Inapplicable("graph is not planar")


def embedding_obstruction(g: Graph, s: Surface) -> str | None:
    """A reason ``g`` cannot embed in ``s``, if a cheap necessary test finds one."""
    if s.is_sphere and not is_planar(g, witness=False):
        return "graph is not planar"
    if g.is_complete() and g.n > maximal_complete_graph(s):
        return f"K_{g.n} does not embed in the {s.name()}"
    if g.n >= 3 and is_connected(g) and g.e > euler_edge_bound(g.n, girth(g), s.chi):
        return f"e = {g.e} exceeds the Euler edge bound for the {s.name()}"
    return None


def _embedded_surface(g: Graph, ctx: SurfaceContext | None) -> Surface:
    s = _require_surface(ctx)
    why = embedding_obstruction(g, s)
    if why is not None:
        raise Inapplicable(why)
    return s


# --------------------------------------------------------------------------
# individual bounds
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FiedlerChain:
    a_bound: float
    vertex_connectivity: int
    d_min: int
    density: float

    def holds(self, a: float, tol: float = TIGHT_TOL) -> bool:
        return (
            a <= self.vertex_connectivity + tol
            and self.vertex_connectivity <= self.d_min
            and self.d_min <= self.density + tol
        )


def fiedler_chain(g: Graph) -> FiedlerChain:
    """a(G) <= v(G) <= d_min <= 2e/n for connected non-complete graphs."""
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    _require_noncomplete(g)
    return FiedlerChain(
        algebraic_connectivity(g), vertex_connectivity(g), g.d_min, 2 * g.e / g.n
    )


def euler_density_bound(g: Graph, ctx: SurfaceContext | None) -> float:
    """2g/(g-2) * (n - chi)/n, with an acyclic graph treated as girth 3."""
    _require_noncomplete(g)
    if g.n < 3:
        raise Inapplicable("needs n >= 3")
    s = _embedded_surface(g, ctx)
    gl = girth(g) or 3
    return 2 * gl / (gl - 2) * (g.n - s.chi) / g.n


def cut_bound(g: Graph, h: VertexSubset) -> float:
    """d(H) n / (m (n - m)) for a proper nonempty subset H."""
    m = h.m
    return subset_degree(g, h) * g.n / (m * (g.n - m))


def _masks_to_subset(g: Graph, mask: int) -> VertexSubset:
    return VertexSubset(frozenset(v for v in range(g.n) if mask >> v & 1), g.n)


def all_cut_bounds(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Cut-bound value for every subset not containing the last vertex.

    Complements give identical values, so this covers every proper subset.
    Returns ``(masks, values)``.
    """
    n = g.n
    if n < 2:
        raise Inapplicable("needs n >= 2")
    masks = np.arange(1, 1 << (n - 1), dtype=np.int64)
    boundary = np.zeros_like(masks)
    for i, j in g.edges:
        boundary += ((masks >> i) ^ (masks >> j)) & 1
    m = np.zeros_like(masks)
    for v in range(n - 1):
        m += (masks >> v) & 1
    return masks, boundary * n / (m * (n - m))


def _candidate_best(g: Graph, candidates: list[int]) -> tuple[VertexSubset, float]:
    best_mask, best_val = -1, math.inf
    full = (1 << g.n) - 1
    seen = set()
    for mask in candidates:
        if mask == 0 or mask == full or mask in seen:
            continue
        seen.add(mask)
        h = _masks_to_subset(g, mask)
        val = cut_bound(g, h)
        if val < best_val - 1e-15:
            best_mask, best_val = mask, val
    if best_mask < 0:
        raise Inapplicable("no proper subset candidates")
    return _masks_to_subset(g, best_mask), best_val


def best_cut_bound(g: Graph, strategy: str = "exhaustive") -> tuple[VertexSubset, float]:
    """Smallest cut bound found by ``strategy``.

    ``exhaustive`` (n <= 16) is optimal; ``cycles`` tries shortest cycles
    (arcs when the cycle is Hamiltonian, singletons for forests);
    ``fiedler_sweep`` tries threshold prefixes of a Fiedler vector.
    """
    if g.n < 2:
        raise Inapplicable("needs n >= 2")
    if strategy == "exhaustive":
        if g.n > EXHAUSTIVE_MAX_N:
            raise ResourceLimitError(f"exhaustive cut search limited to n <= {EXHAUSTIVE_MAX_N}")
        masks, values = all_cut_bounds(g)
        k = int(np.argmin(values))
        return _masks_to_subset(g, int(masks[k])), float(values[k])
    if strategy == "cycles":
        cands = []
        for cyc in shortest_cycles(g):
            if len(cyc) < g.n:
                cands.append(sum(1 << v for v in cyc))
            else:
                for start in range(len(cyc)):
                    for length in range(1, len(cyc)):
                        cands.append(sum(1 << cyc[(start + k) % len(cyc)] for k in range(length)))
        if not cands:
            cands = [1 << v for v in range(g.n)]
        return _candidate_best(g, cands)
    if strategy == "fiedler_sweep":
        x = fiedler_vector(g)
        order = sorted(range(g.n), key=lambda v: (x[v], v))
        cands, mask = [], 0
        for v in order[:-1]:
            mask |= 1 << v
            cands.append(mask)
        return _candidate_best(g, cands)
    raise ValueError(f"unknown cut strategy {strategy!r}")


def regular_girth_bound(g: Graph, ctx: SurfaceContext | None) -> float:
    """2n / ((n - g)(g - 2)) * (2 - g chi / n) for regular graphs of girth g < n."""
    if is_regular(g) is None:
        raise Inapplicable("graph is not regular")
    gl = girth(g)
    if gl is None:
        raise Inapplicable("graph is acyclic")
    if gl >= g.n:
        raise Inapplicable("girth equals n (cycle graph)")
    s = _embedded_surface(g, ctx)
    n = g.n
    return 2 * n / ((n - gl) * (gl - 2)) * (2 - gl * s.chi / n)


def planar_regular_girth_bound(g: Graph) -> float:
    """4 / (g - 2) for regular planar graphs of girth g < n."""
    if is_regular(g) is None:
        raise Inapplicable("graph is not regular")
    gl = girth(g)
    if gl is None:
        raise Inapplicable("graph is acyclic")
    if gl >= g.n:
        raise Inapplicable("girth equals n (cycle graph)")
    _require_planar(g)
    return 4 / (gl - 2)


def planar_cubic_bound(g: Graph) -> float:
    if is_regular(g) != 3:
        raise Inapplicable("graph is not cubic")
    if g.n == 4:
        raise Inapplicable("K_4 is excluded")
    _require_planar(g)
    return 2.0


def planar_max_degree_bound(g: Graph) -> float:
    if g.d_max > 5:
        raise Inapplicable("maximum degree exceeds 5")
    _require_planar(g)
    return 4.0


def cook_planar_bound(g: Graph) -> float:
    """a <= v <= Cook's planar girth cap."""
    _require_noncomplete(g)
    _require_planar(g)
    return float(cook_planar_girth_cap(girth(g)))


def chromatic_bound(g: Graph) -> float:
    """n - ceil(n / chromatic number) for non-complete graphs."""
    _require_noncomplete(g)
    k = chromatic_number(g)
    return float(g.n - -(-g.n // k))


def bichromatic_bound(g: Graph, ctx: SurfaceContext | None) -> float:
    """4 (n - chi) / n for non-complete graphs of chromatic number two."""
    if g.e == 0 or not is_bipartite(g):
        raise Inapplicable("chromatic number is not two")
    _require_noncomplete(g)
    if g.n < 3:
        raise Inapplicable("needs n >= 3")
    s = _embedded_surface(g, ctx)
    return 4 * (g.n - s.chi) / g.n


def planar_bichromatic_bound(g: Graph) -> float:
    if g.e == 0 or not is_bipartite(g):
        raise Inapplicable("chromatic number is not two")
    _require_noncomplete(g)
    _require_planar(g)
    return 3.0


def heawood_bound(g: Graph, ctx: SurfaceContext | None) -> float:
    """Surface cap on a(G).

    Complete graphs are capped by the largest complete graph on the surface;
    other graphs by Cook's vertex-connectivity bound (5 on the sphere).  On
    the Klein bottle both give 6.
    """
    s = _embedded_surface(g, ctx)
    if g.is_complete():
        return float(maximal_complete_graph(s))
    if s.is_sphere:
        return 5.0
    return float(cook_number(s.chi))


# --------------------------------------------------------------------------
# Ramanujan graphs
# --------------------------------------------------------------------------


def ramanujan_gap(d: int) -> float:
    """Lower bound d - 2 sqrt(d - 1) on a(G) for d-regular Ramanujan graphs."""
    if d < 1:
        raise ValueError("degree must be positive")
    return d - 2 * math.sqrt(d - 1)


def _genus_term_at_most(d: int, k: int) -> bool:
    """Exactly decide ((2d - 4 sqrt(d-1) - 5)^2 - 1) / 48 <= k."""
    p = (2 * d - 5) ** 2 + 16 * (d - 1) - 1
    q = 8 * (2 * d - 5)
    lhs = p - 48 * k
    # term <= k  <=>  lhs <= q sqrt(d - 1), with q > 0 for d >= 3
    if lhs <= 0:
        return True
    return lhs * lhs <= q * q * (d - 1)


def ramanujan_genus_lower_bound(d: int) -> int:
    """Orientable genus lower bound for Ramanujan graphs of degree d >= 9.

    Float evaluation, with an exact integer comparison whenever the value
    lies within 1e-9 of an integer.
    """
    if d < 9:
        raise Inapplicable(f"degree {d} < 9: the gap bound gives no genus information")
    x = ((2 * d - 4 * math.sqrt(d - 1) - 5) ** 2 - 1) / 48
    r = round(x)
    if abs(x - r) < 1e-9:
        return r if _genus_term_at_most(d, r) else r + 1
    return math.ceil(x)


# --------------------------------------------------------------------------
# asymptotic caps
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class AsymptoticCap:
    upper: float
    lower: float | None = None


def asymptotic_caps(kind: str, param: int | None = None) -> AsymptoticCap:
    """Closed-form caps on limsup a(G_n) for graph classes on a fixed surface.

    ``kind`` is ``general``, ``regular``, ``regular_girth`` (param = girth)
    or ``d_regular`` (param = degree).
    """
    if kind == "general":
        return AsymptoticCap(6.0, 2.0)
    if kind == "regular":
        return AsymptoticCap(4.0)
    if kind == "regular_girth":
        if param is None or param < 3:
            raise ValueError("regular_girth needs a girth >= 3")
        return AsymptoticCap(4 / (param - 2))
    if kind == "d_regular":
        if param is None or param < 2:
            raise ValueError("d_regular needs a degree >= 2")
        if param <= 10:
            return AsymptoticCap(ramanujan_gap(param))
        return AsymptoticCap(4.0)
    raise ValueError(f"unknown asymptotic class {kind!r}")


# --------------------------------------------------------------------------
# verdict
# --------------------------------------------------------------------------


@dataclass
class BoundEntry:
    name: str
    value: float | None
    applicable: bool
    reason: str
    paper_ref: str


@dataclass
class BoundReport:
    graph_id: str
    n: int
    e: int
    a_computed: float
    entries: list[BoundEntry]
    best_upper: float | None
    best_name: str | None
    tight: bool
    context: SurfaceContext = field(default_factory=lambda: SurfaceContext(None, "none"))

    def entry(self, name: str) -> BoundEntry:
        for item in self.entries:
            if item.name == name:
                return item
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "graph": self.graph_id,
            "n": self.n,
            "e": self.e,
            "a": sig12(self.a_computed),
            "entries": [
                {
                    "name": x.name,
                    "value": sig12(x.value) if x.value is not None else None,
                    "applicable": x.applicable,
                    "reason": x.reason,
                    "paper_ref": x.paper_ref,
                }
                for x in self.entries
            ],
            "best_upper": sig12(self.best_upper) if self.best_upper is not None else None,
            "tight": self.tight,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def sig12(x: float) -> float:
    return float(f"{x:.12g}")


def _cut_entry(g: Graph) -> float:
    if g.n <= EXHAUSTIVE_MAX_N:
        return best_cut_bound(g, "exhaustive")[1]
    return min(best_cut_bound(g, "cycles")[1], best_cut_bound(g, "fiedler_sweep")[1])


# name, reference, evaluator(g, ctx)
CATALOG: list[tuple[str, str, Callable[[Graph, SurfaceContext], float]]] = [
    ("fiedler_vertex_connectivity", "Fiedler chain: a <= v(G)",
     lambda g, c: float(fiedler_chain(g).vertex_connectivity)),
    ("fiedler_min_degree", "Fiedler chain: a <= d_min",
     lambda g, c: float(fiedler_chain(g).d_min)),
    ("fiedler_edge_density", "Fiedler chain: a <= 2e/n",
     lambda g, c: fiedler_chain(g).density),
    ("euler_density", "Euler edge bound with the Fiedler chain: 2g/(g-2) (n-chi)/n",
     euler_density_bound),
    ("heawood", "Heawood-type surface cap: H(S) for K^gamma, C(S) otherwise; 5 on the sphere",
     heawood_bound),
    ("cook_planar_girth", "Cook planar girth cap on v(G): 5, 3, 2 for g = 3, 4-5, >= 6",
     lambda g, c: cook_planar_bound(g)),
    ("cut_bound", "subset-degree cut bound d(H) n / (m (n - m)), minimised over H",
     lambda g, c: _cut_entry(g)),
    ("planar_max_degree_5", "planar with d_max <= 5: a <= 4",
     lambda g, c: planar_max_degree_bound(g)),
    ("regular_girth", "regular girth bound 2n/((n-g)(g-2)) (2 - g chi/n)",
     regular_girth_bound),
    ("planar_regular_girth", "regular planar girth bound 4/(g-2)",
     lambda g, c: planar_regular_girth_bound(g)),
    ("planar_cubic", "planar cubic graphs other than K_4: a <= 2",
     lambda g, c: planar_cubic_bound(g)),
    ("chromatic", "chromatic bound n - ceil(n / kappa)",
     lambda g, c: chromatic_bound(g)),
    ("bichromatic", "bichromatic Euler bound 4 (n - chi)/n",
     bichromatic_bound),
    ("planar_bichromatic", "bichromatic planar graphs: a <= 3",
     lambda g, c: planar_bichromatic_bound(g)),
]


def graph_id(g: Graph) -> str:
    try:
        return graph6.encode(g)
    except GraphError:
        return f"n={g.n},e={g.e}"


def verdict(g: Graph, ctx: SurfaceContext | None = None) -> BoundReport:
    """Evaluate every catalogued bound on a connected graph.

    Failures of individual bounds are recorded as inapplicable entries;
    the report is never aborted by one of them.
    """
    if g.n < 2:
        raise PreconditionError("verdict needs at least 2 vertices")
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if ctx is None:
        ctx = SurfaceContext.auto(g)
    a = algebraic_connectivity(g)
    entries = []
    for name, ref, fn in CATALOG:
        try:
            value = fn(g, ctx)
        except (Inapplicable, ResourceLimitError, GraphError, ValueError) as exc:
            entries.append(BoundEntry(name, None, False, str(exc), ref))
            continue
        reason = "applies"
        if name == "euler_density" and girth(g) is None:
            reason = "applies (acyclic: girth taken as 3)"
        entries.append(BoundEntry(name, value, True, reason, ref))
    best, best_name = None, None
    for item in entries:
        if item.applicable and (best is None or item.value < best - 1e-15):
            best, best_name = item.value, item.name
    tight = best is not None and abs(a - best) <= TIGHT_TOL
    return BoundReport(graph_id(g), g.n, g.e, a, entries, best, best_name, tight, ctx)
