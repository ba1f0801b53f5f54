"""Lattice point enumeration, gaps, and polytope verdicts."""

from .enumerate import (
    classify_lattice_points,
    enumerate_lattice_points,
    is_sum_of_k_cuts,
    naive_lattice_points,
)
from .hilbert import HilbertBasisReport, hilbert_basis, placing_triangulation, verify_hilbert_basis
from .verdicts import (
    GapReport,
    NormalityVerdict,
    SeminormalityVerdict,
    VeryAmpleVerdict,
    check_normal,
    check_seminormal,
    check_very_ample,
    find_gaps,
)

__all__ = [
    "GapReport",
    "HilbertBasisReport",
    "NormalityVerdict",
    "SeminormalityVerdict",
    "VeryAmpleVerdict",
    "check_normal",
    "check_seminormal",
    "check_very_ample",
    "classify_lattice_points",
    "enumerate_lattice_points",
    "find_gaps",
    "hilbert_basis",
    "is_sum_of_k_cuts",
    "naive_lattice_points",
    "placing_triangulation",
    "verify_hilbert_basis",
]
