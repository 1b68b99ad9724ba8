"""Exact flood polynomials of finite simple graphs."""

from floodpoly.cascade import CascadeTrace, cascade_step, closure, floods, trace
from floodpoly.enumeration import (
    FloodSummary,
    flood_polynomial,
    flood_summary,
    free_vertices,
    minimal_flooding_sets,
)
from floodpoly import analysis, formulas
from floodpoly.families import parse_family
from floodpoly.graph import Graph, VertexSet, disjoint_union, members, vertex_set
from floodpoly.poly import IntPolynomial

__all__ = [
    "analysis",
    "formulas",
    "parse_family",
    "CascadeTrace",
    "FloodSummary",
    "Graph",
    "IntPolynomial",
    "VertexSet",
    "cascade_step",
    "closure",
    "disjoint_union",
    "flood_polynomial",
    "flood_summary",
    "floods",
    "free_vertices",
    "members",
    "minimal_flooding_sets",
    "trace",
    "vertex_set",
]
