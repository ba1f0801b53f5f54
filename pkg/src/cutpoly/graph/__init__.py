"""Multigraphs, cuts, planarity, colorings and minors."""

from .coloring import COLORS, Coloring4, four_color, is_proper_coloring
from .cycles import (
    cycle_basis,
    euler_cycle_decomposition,
    is_bipartite,
    is_even_subgraph,
    recover_cut_from_edgeset,
)
from .minors import K5MinorWitness, has_K5_minor, verify_k5_witness
from .multigraph import (
    ContractionResult,
    Cut,
    Edge,
    EdgeVector,
    Multigraph,
    components,
    contract_edges,
    crossing_set,
    cut_vector,
    enumerate_cuts,
    induced_subgraph,
    lift_cut,
)
from .planar import DualMap, PlanarEmbedding, dual_graph, is_planar, satisfies_euler, trace_faces

__all__ = [
    "COLORS",
    "Coloring4",
    "ContractionResult",
    "Cut",
    "DualMap",
    "Edge",
    "EdgeVector",
    "K5MinorWitness",
    "Multigraph",
    "PlanarEmbedding",
    "components",
    "contract_edges",
    "crossing_set",
    "cut_vector",
    "cycle_basis",
    "dual_graph",
    "enumerate_cuts",
    "euler_cycle_decomposition",
    "four_color",
    "has_K5_minor",
    "induced_subgraph",
    "is_bipartite",
    "is_even_subgraph",
    "is_planar",
    "is_proper_coloring",
    "lift_cut",
    "recover_cut_from_edgeset",
    "satisfies_euler",
    "trace_faces",
    "verify_k5_witness",
]
