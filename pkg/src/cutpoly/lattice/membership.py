"""The cut lattice and membership in dilated cut polytopes."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exceptions import NotInDilationError
from ..graph.cycles import cycle_basis
from ..graph.multigraph import Cut, EdgeVector, Multigraph, cut_vector, enumerate_cuts
from ..limits import bounded
from .hnf import IntMatrix, hnf, pivot_product, solve_in_lattice
from .simplex import lp_member_convex
from .vectors import DilatedPoint, check_dimension

logger = logging.getLogger(__name__)

OUT_OF_RANGE = "out of range"
NOT_IN_LATTICE = "not in lattice"
NOT_IN_POLYTOPE = "not in polytope"


@dataclass(frozen=True)
class LatticeDescription:
    """Two descriptions of the lattice L spanned by the cut vectors of a graph.

    Attributes:
        parity_constraints: One edge set per fundamental cycle; x is in L iff
            x sums to an even number over each
        hnf_basis: Hermite normal form rows spanning L
        edge_count: Ambient dimension m
    """

    parity_constraints: tuple[frozenset[int], ...]
    hnf_basis: IntMatrix
    edge_count: int


@lru_cache(maxsize=64)
def _cut_table(g: Multigraph) -> tuple[tuple[Cut, ...], tuple[EdgeVector, ...]]:
    cuts = tuple(enumerate_cuts(g))
    return cuts, tuple(cut_vector(g, c) for c in cuts)


@bounded("max_cut_vertices")
def cut_vectors(g: Multigraph) -> tuple[EdgeVector, ...]:
    """All cut vectors of g, in enumerate_cuts order (cached per graph).

    Raises:
        ResourceLimitError: If g has more than max_cut_vertices vertices
    """
    return _cut_table(g)[1]


@bounded("max_cut_vertices")
def all_cuts(g: Multigraph) -> tuple[Cut, ...]:
    """enumerate_cuts(g) as a cached tuple."""
    return _cut_table(g)[0]


@bounded("max_cut_vertices")
def lattice_description(g: Multigraph) -> LatticeDescription:
    """Parity constraints from a cycle basis and the HNF of all cut vectors.

    Args:
        g: Graph

    Returns:
        LatticeDescription of the cut lattice of g

    Raises:
        ResourceLimitError: If g has more than max_cut_vertices vertices
    """
    basis = hnf(cut_vectors(g)) if g.edge_count else ()
    ld = LatticeDescription(tuple(cycle_basis(g)), basis, g.edge_count)
    logger.debug(
        f"Lattice of {g.edge_count} edges: {len(ld.parity_constraints)} parity constraints, "
        f"HNF rank {len(basis)}"
    )
    return ld


def in_cut_lattice(ld: LatticeDescription, x: Sequence[int]) -> bool:
    """Parity rule: x is in L iff every fundamental cycle has even x-sum."""
    check_dimension(x, ld.edge_count)
    return all(sum(x[e] for e in cycle) % 2 == 0 for cycle in ld.parity_constraints)


def in_hnf_lattice(ld: LatticeDescription, x: Sequence[int]) -> bool:
    """HNF rule: x is an integer combination of the HNF basis rows."""
    check_dimension(x, ld.edge_count)
    return solve_in_lattice(ld.hnf_basis, x) is not None


def lattice_index(ld: LatticeDescription) -> int:
    """Product of the HNF pivots; [Z^m : L] when L has rank m."""
    return pivot_product(ld.hnf_basis)


def dilation_failure(g: Multigraph, ld: LatticeDescription, p: DilatedPoint) -> str | None:
    """Why p is not a lattice point of k * Cut(g), or None when it is.

    Raises:
        DimensionMismatchError: If p does not have one entry per edge
    """
    check_dimension(p.vector, g.edge_count)
    k = p.level
    if any(not 0 <= x <= k for x in p.vector):
        return OUT_OF_RANGE
    if not in_cut_lattice(ld, p.vector):
        return NOT_IN_LATTICE
    target = [Fraction(x, k) for x in p.vector]
    if not lp_member_convex(cut_vectors(g), target):
        return NOT_IN_POLYTOPE
    return None


def in_dilation(g: Multigraph, ld: LatticeDescription, p: DilatedPoint) -> bool:
    """True iff p.vector is in L and p.vector / p.level is in Cut(g)."""
    return dilation_failure(g, ld, p) is None


def require_in_dilation(g: Multigraph, ld: LatticeDescription, p: DilatedPoint) -> None:
    """Raise NotInDilationError naming the failed condition unless in_dilation holds."""
    reason = dilation_failure(g, ld, p)
    if reason is not None:
        raise NotInDilationError(
            f"Point {list(p.vector)} is not a lattice point of {p.level}P: {reason}",
            reason=reason,
            k=p.level,
        )
