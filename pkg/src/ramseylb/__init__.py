"""Extremal two-colorings certifying Ramsey lower bounds for fans, wheels,
kipases and wheel-versus-clique pairs, with exact containment detectors and
machine-checkable certificates."""

__version__ = "0.1.0"

from .coloring import TwoColoring, from_rbc, to_rbc
from .graph import Graph
from .patterns import PatternSpec, parse_pattern

__all__ = [
    "Graph",
    "TwoColoring",
    "PatternSpec",
    "parse_pattern",
    "from_rbc",
    "to_rbc",
    "__version__",
]
