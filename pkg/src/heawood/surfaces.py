"""Integer-exact surface arithmetic: Euler characteristic, Heawood and Cook
numbers, complete-graph genus, and Euler-formula edge bounds.

Everything here is integer arithmetic; square roots go through
``math.isqrt`` so perfect-square boundaries are never misjudged.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class Surface:
    """Closed surface: ``genus`` handles if orientable, else crosscaps."""

    orientable: bool
    genus: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise SurfaceError("genus must be nonnegative")
        if not self.orientable and self.genus == 0:
            raise SurfaceError("a non-orientable surface needs at least one crosscap")

    @property
    def chi(self) -> int:
        return euler_characteristic(self)

    @property
    def is_sphere(self) -> bool:
        return self.orientable and self.genus == 0

    @property
    def is_klein_bottle(self) -> bool:
        return not self.orientable and self.genus == 2

    def name(self) -> str:
        if self.is_sphere:
            return "sphere"
        if self.orientable:
            return "torus" if self.genus == 1 else f"orientable genus {self.genus}"
        if self.genus == 1:
            return "projective plane"
        if self.genus == 2:
            return "Klein bottle"
        return f"non-orientable genus {self.genus}"

    def spec(self) -> str:
        return f"{'orientable' if self.orientable else 'nonorientable'}:{self.genus}"


SPHERE = Surface(True, 0)
TORUS = Surface(True, 1)
PROJECTIVE_PLANE = Surface(False, 1)
KLEIN_BOTTLE = Surface(False, 2)


def parse_surface(text: str) -> Surface:
    """Parse ``orientable:h`` or ``nonorientable:k``."""
    m = re.fullmatch(r"\s*(orientable|nonorientable|non-orientable)\s*:\s*(\d+)\s*", text)
    if not m:
        raise SurfaceError(f"bad surface spec {text!r}; expected orientable:h or nonorientable:k")
    return Surface(m.group(1) == "orientable", int(m.group(2)))


def euler_characteristic(s: Surface) -> int:
    return 2 - 2 * s.genus if s.orientable else 2 - s.genus


def _root_part(chi: int) -> int:
    # floor(sqrt(49 - 24 chi)); the enclosing floor((c + r) / 2) only changes
    # when 49 - 24 chi crosses a perfect square, so the integer root suffices
    return math.isqrt(49 - 24 * chi)


def heawood_number(chi: int) -> int:
    """floor((7 + sqrt(49 - 24 chi)) / 2) for chi <= 2."""
    if chi > 2:
        raise SurfaceError(f"Euler characteristic must be <= 2, got {chi}")
    return (7 + _root_part(chi)) // 2


def cook_number(chi: int) -> int:
    """floor((5 + sqrt(49 - 24 chi)) / 2); defined here for chi <= 1."""
    if chi > 1:
        raise SurfaceError(f"Cook's bound needs Euler characteristic <= 1, got {chi}")
    return (5 + _root_part(chi)) // 2


def cook_planar_girth_cap(girth: int | None) -> int:
    """Vertex-connectivity cap for planar graphs by girth (None = acyclic)."""
    if girth is None or girth >= 6:
        return 2
    if girth < 3:
        raise SurfaceError(f"girth must be >= 3, got {girth}")
    return 5 if girth == 3 else 3


def complete_graph_genus(p: int, orientable: bool) -> int:
    """Minimum genus of a surface carrying K_p."""
    if p < 3:
        raise SurfaceError(f"complete-graph genus formula needs p >= 3, got {p}")
    num = (p - 3) * (p - 4)
    if orientable:
        return -(-num // 12)
    if p == 7:
        return 3
    return -(-num // 6)


def maximal_complete_graph(s: Surface) -> int:
    """Largest p such that K_p embeds in ``s``."""
    # K_1 .. K_4 are planar; genus grows without bound so the scan terminates
    p = 4
    while complete_graph_genus(p + 1, s.orientable) <= s.genus:
        p += 1
    return p


def euler_edge_bound(n: int, girth: int | None, chi: int) -> int:
    """floor(g/(g-2) * (n - chi)); an acyclic graph is treated as girth 3."""
    if n < 3:
        raise SurfaceError(f"Euler edge bound needs n >= 3, got {n}")
    g = 3 if girth is None else girth
    if g < 3:
        raise SurfaceError(f"girth must be >= 3, got {g}")
    return (g * (n - chi)) // (g - 2)


@dataclass(frozen=True)
class SurfaceRow:
    chi: int
    heawood: int
    cook: int | None
    max_complete: int | None
    note: str = ""


def surface_row(chi: int, orientable: bool | None = None) -> SurfaceRow:
    """One line of the surface table.

    ``max_complete`` is reported for the surface of the requested
    orientability with this Euler characteristic, if one exists.
    """
    h = heawood_number(chi)
    c = cook_number(chi) if chi <= 1 else None
    surf = surface_for_chi(chi, orientable)
    mc = maximal_complete_graph(surf) if surf is not None else None
    note = ""
    if surf is not None and surf.is_klein_bottle:
        note = f"Klein bottle: cap 6 < H={h}"
    return SurfaceRow(chi, h, c, mc, note)


def surface_for_chi(chi: int, orientable: bool | None) -> Surface | None:
    if chi > 2:
        return None
    if orientable is None:
        orientable = chi % 2 == 0
    if orientable:
        return Surface(True, (2 - chi) // 2) if chi % 2 == 0 else None
    return Surface(False, 2 - chi) if chi <= 1 else None
