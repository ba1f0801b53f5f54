"""cutpoly: exact lattice-point audits and constructive decompositions for cut polytopes."""

from .audit import (
    GapReport,
    HilbertBasisReport,
    NormalityVerdict,
    SeminormalityVerdict,
    VeryAmpleVerdict,
    check_normal,
    check_seminormal,
    check_very_ample,
    enumerate_lattice_points,
    find_gaps,
    hilbert_basis,
    is_sum_of_k_cuts,
)
from .decompose import (
    balanced_three_cuts,
    decompose1,
    decompose2_planar,
    decompose3_planar,
    decompose_planar,
    four_coloring_from_decomposition,
)
from .exceptions import (
    CutpolyError,
    DimensionMismatchError,
    GraphFormatError,
    InternalContradictionError,
    InvalidInputError,
    NotInDilationError,
    NotPlanarError,
    PreconditionError,
    ResourceLimitError,
    WorkerError,
)
from .graph import Coloring4, Cut, Multigraph, cut_vector, enumerate_cuts, four_color, has_K5_minor
from .io import load_graph, load_point, parse_graph, parse_point
from .lattice import DilatedPoint, in_dilation, lattice_description
from .limits import Limits, get_limits, set_limits, use_limits
from .switching import SwitchMap, switch_cut, switch_point

__version__ = "0.1.0"
__all__ = [
    "Coloring4",
    "Cut",
    "CutpolyError",
    "DilatedPoint",
    "DimensionMismatchError",
    "GapReport",
    "GraphFormatError",
    "HilbertBasisReport",
    "InternalContradictionError",
    "InvalidInputError",
    "Limits",
    "Multigraph",
    "NormalityVerdict",
    "NotInDilationError",
    "NotPlanarError",
    "PreconditionError",
    "ResourceLimitError",
    "SeminormalityVerdict",
    "SwitchMap",
    "VeryAmpleVerdict",
    "WorkerError",
    "balanced_three_cuts",
    "check_normal",
    "check_seminormal",
    "check_very_ample",
    "cut_vector",
    "decompose1",
    "decompose2_planar",
    "decompose3_planar",
    "decompose_planar",
    "enumerate_cuts",
    "enumerate_lattice_points",
    "find_gaps",
    "four_color",
    "four_coloring_from_decomposition",
    "get_limits",
    "has_K5_minor",
    "hilbert_basis",
    "in_dilation",
    "is_sum_of_k_cuts",
    "lattice_description",
    "load_graph",
    "load_point",
    "parse_graph",
    "parse_point",
    "set_limits",
    "switch_cut",
    "switch_point",
    "use_limits",
]
