"""Mostar and edge Mostar indices, extremal graph families, and exhaustive bound checks."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, canonical_graph, canonical_pair
from .enumeration import (
    BicyclicClass,
    brute_force_oracle,
    classify_bicyclic,
    enumerate_bicyclic,
    enumerate_trees,
    enumerate_unicyclic,
)
from .families import FamilySpec, expected_value, make_b_family, make_basic, make_s_m_r, make_theta
from .graph import (
    Edge,
    Graph,
    GraphError,
    bfs_distances,
    cut_edges,
    is_connected,
    is_pendent_edge,
    join_at,
)
from .graph6 import Graph6Error
from .graph6 import decode as graph6_decode
from .graph6 import encode as graph6_encode
from .indices import EdgeSplit, VertexSplit, edge_mostar, edge_split, edge_split_table, mostar
from .transforms import PendantProfile, predicted_delta, shift_pendants

__all__ = [
    "BicyclicClass", "CanonicalForm", "Edge", "EdgeSplit", "FamilySpec", "Graph",
    "Graph6Error", "GraphError", "PendantProfile", "VertexSplit", "are_isomorphic",
    "bfs_distances", "brute_force_oracle", "canonical_form", "canonical_graph",
    "canonical_pair",
    "classify_bicyclic", "cut_edges", "edge_mostar", "edge_split", "edge_split_table",
    "enumerate_bicyclic", "enumerate_trees", "enumerate_unicyclic", "expected_value",
    "graph6_decode", "graph6_encode", "is_connected", "is_pendent_edge", "join_at",
    "make_b_family", "make_basic", "make_s_m_r", "make_theta", "mostar",
    "predicted_delta", "shift_pendants",
]
