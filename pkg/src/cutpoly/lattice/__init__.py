"""Exact lattice arithmetic: Hermite normal forms, rational LP and cut-lattice membership."""

from .hnf import HnfResult, IntMatrix, hnf, hnf_with_transform, solve_in_lattice
from .membership import (
    NOT_IN_LATTICE,
    NOT_IN_POLYTOPE,
    OUT_OF_RANGE,
    LatticeDescription,
    all_cuts,
    cut_vectors,
    dilation_failure,
    in_cut_lattice,
    in_dilation,
    in_hnf_lattice,
    lattice_description,
    lattice_index,
    require_in_dilation,
)
from .simplex import LpResult, SimplexTableau, lp_member_cone, lp_member_convex
from .vectors import DilatedPoint, add, scale, subtract, support, vector_sum

__all__ = [
    "NOT_IN_LATTICE",
    "NOT_IN_POLYTOPE",
    "OUT_OF_RANGE",
    "DilatedPoint",
    "HnfResult",
    "IntMatrix",
    "LatticeDescription",
    "LpResult",
    "SimplexTableau",
    "add",
    "all_cuts",
    "cut_vectors",
    "dilation_failure",
    "hnf",
    "hnf_with_transform",
    "in_cut_lattice",
    "in_dilation",
    "in_hnf_lattice",
    "lattice_description",
    "lattice_index",
    "lp_member_cone",
    "lp_member_convex",
    "require_in_dilation",
    "scale",
    "solve_in_lattice",
    "subtract",
    "support",
    "vector_sum",
]
