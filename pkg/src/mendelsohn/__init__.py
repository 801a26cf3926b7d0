"""Resolvable decompositions of complete symmetric digraphs into directed odd cycles.

The package constructs, for every odd ``m >= 5``, a partition of the
arcs of the complete symmetric digraph on ``2m`` vertices into ``2m-1``
spanning factors, each consisting of two vertex-disjoint directed
m-cycles, and independently verifies the result.
"""

__version__ = "0.1.0"

from .core import (
    Arc,
    Digraph,
    DirectedCycle,
    Dipath,
    Factor,
    Factorization,
    Vertex,
)

__all__ = [
    "Arc",
    "Digraph",
    "DirectedCycle",
    "Dipath",
    "Factor",
    "Factorization",
    "Vertex",
    "__version__",
]
