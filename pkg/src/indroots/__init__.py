"""Exact independence polynomials, certified largest real roots, and the graph order they induce."""

from .engine import BudgetExceeded, PolyCache, indpoly, indpoly_bruteforce, indpoly_clique
from .families import FamilySpec, corona, dagger_swap, make, star_swap
from .graph import Graph, Graph6Error, GraphError, parse_graph6, render_graph6
from .order import RelationKind, compare, is_equivalent, is_preceq
from .poly import Poly, format_poly, parse_poly
from .roots import InvariantError, IsolatingInterval, xi
from .wellcovered import is_very_well_covered, is_well_covered, pendant_edges_perfect_matching

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "PolyCache", "indpoly", "indpoly_bruteforce", "indpoly_clique",
    "FamilySpec", "corona", "dagger_swap", "make", "star_swap",
    "Graph", "Graph6Error", "GraphError", "parse_graph6", "render_graph6",
    "RelationKind", "compare", "is_equivalent", "is_preceq",
    "Poly", "format_poly", "parse_poly",
    "InvariantError", "IsolatingInterval", "xi",
    "is_very_well_covered", "is_well_covered", "pendant_edges_perfect_matching",
]
