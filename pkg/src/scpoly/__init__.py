"""Subgraph component polynomial Q(G; x, y): computation, invariants, comparisons, census."""
from .graph import Graph, are_isomorphic, canonical_key
from .graphio import from_graph6, parse_graph, to_graph6
from .poly import BiPoly, UniPoly
from .qpoly import q_by_definition, q_by_recurrence, q_equivalent, q_poly

__all__ = [
    "BiPoly",
    "Graph",
    "UniPoly",
    "are_isomorphic",
    "canonical_key",
    "from_graph6",
    "parse_graph",
    "q_by_definition",
    "q_by_recurrence",
    "q_equivalent",
    "q_poly",
    "to_graph6",
]
