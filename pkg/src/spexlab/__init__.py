"""Spectral extremal graph experiments for intersecting even cycles."""

from .constructions import CycleSpec, CyclePathSpec
from .graph import DisconnectedGraphError, Graph, GraphError
from .graph6 import Graph6Error, graph6_decode, graph6_encode

__version__ = "0.1.0"

__all__ = [
    "CyclePathSpec",
    "CycleSpec",
    "DisconnectedGraphError",
    "Graph",
    "Graph6Error",
    "GraphError",
    "graph6_decode",
    "graph6_encode",
]
