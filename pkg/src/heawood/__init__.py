"""Algebraic connectivity of graphs on surfaces: spectra, Heawood-type
bounds, and exhaustive checks over small graphs."""

from .bounds import BoundReport, SurfaceContext, verdict
from .graph import Graph, GraphError, VertexSubset, build, family
from .graph6 import decode as from_graph6
from .graph6 import encode as to_graph6
from .spectral import algebraic_connectivity, laplacian_spectrum
from .surfaces import Surface, cook_number, heawood_number

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "Graph",
    "GraphError",
    "Surface",
    "SurfaceContext",
    "VertexSubset",
    "algebraic_connectivity",
    "build",
    "cook_number",
    "family",
    "from_graph6",
    "heawood_number",
    "laplacian_spectrum",
    "to_graph6",
    "verdict",
]
