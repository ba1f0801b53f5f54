"""Gap reports and the normal, seminormal and very ample verdicts."""

import logging
from typing import Literal

from pydantic import BaseModel, Field

from ..exceptions import InternalContradictionError, PreconditionError
from ..graph.multigraph import Multigraph
from ..lattice.membership import cut_vectors, lattice_description
from ..lattice.vectors import DilatedPoint, scale
from ..limits import get_limits
from ..parallel import ExecutionBackend, get_backend
from ..switching import verify_transitivity
from .enumerate import classify_lattice_points, is_sum_of_k_cuts
from .hilbert import HilbertBasisReport, hilbert_basis

logger = logging.getLogger(__name__)


class GapReport(BaseModel):
    """Gaps of k * Cut(G) for every level k up to k_max.

    Attributes:
        k_max: Highest level enumerated
        gaps: Lattice points of some kP that are not sums of k cuts, by level
            then lexicographically
        lattice_point_counts: Number of lattice points of kP, keyed by k
    """

    k_max: int
    gaps: list[DilatedPoint] = Field(default_factory=list)
    lattice_point_counts: dict[int, int] = Field(default_factory=dict)


class NormalityVerdict(BaseModel):
    """Normality can be refuted by a gap but only certified up to k."""

    verdict: Literal["normal_up_to", "gap_found"]
    k: int
    witness: DilatedPoint | None = None


class SeminormalityVerdict(BaseModel):
    """A violation is a gap x at level k whose doubles and triples are not gaps."""

    verdict: Literal["consistent_up_to", "violation"]
    k: int
    witness: DilatedPoint | None = None


class VeryAmpleVerdict(BaseModel):
    verdict: Literal["very_ample", "not_very_ample"]
    offending: list[tuple[int, ...]] = Field(default_factory=list)
    basis: list[tuple[int, ...]] = Field(default_factory=list)


def find_gaps(
    g: Multigraph,
    k_max: int | None = None,
    backend: ExecutionBackend | None = None,
    stop_at_first: bool = False,
) -> GapReport:
    """Enumerate the gaps of every dilation up to k_max.

    Args:
        g: Graph
        k_max: Highest level (default: the k_max limit)
        backend: Execution backend shared across levels
        stop_at_first: Stop after the first level that has gaps

    Returns:
        GapReport

    Raises:
        ResourceLimitError: If a level's box or the cut count is over its bound
    """
    top = get_limits().k_max if k_max is None else k_max
    if top < 1:
        raise PreconditionError(f"k_max must be >= 1, got {top}")
    ld = lattice_description(g)
    report = GapReport(k_max=top)
    owned = backend is None
    runner = get_backend() if backend is None else backend
    try:
        for k in range(1, top + 1):
            points, gaps = classify_lattice_points(g, ld, k, runner)
            report.lattice_point_counts[k] = len(points)
            report.gaps.extend(DilatedPoint(x, k) for x in gaps)
            if stop_at_first and gaps:
                report.k_max = k
                break
    finally:
        if owned:
            runner.close()
    logger.info(f"Found {len(report.gaps)} gaps up to level {report.k_max}")
    return report


def check_normal(
    g: Multigraph, k_max: int | None = None, backend: ExecutionBackend | None = None
) -> NormalityVerdict:
    """normal_up_to(k_max), or gap_found with the first gap of the lowest level."""
    report = find_gaps(g, k_max, backend, stop_at_first=True)
    if report.gaps:
        witness = report.gaps[0]
        return NormalityVerdict(verdict="gap_found", k=witness.level, witness=witness)
    return NormalityVerdict(verdict="normal_up_to", k=report.k_max)


def check_seminormal(
    g: Multigraph, k_max: int | None = None, backend: ExecutionBackend | None = None
) -> SeminormalityVerdict:
    """Look for a gap x at level k (3k <= k_max) with neither 2x nor 3x a gap.

    2x and 3x are lattice points of 2kP and 3kP, so they fail to be gaps
    exactly when they split into 2k and 3k cuts.

    Raises:
        PreconditionError: If k_max < 3
    """
    top = get_limits().k_max if k_max is None else k_max
    if top < 3:
        raise PreconditionError(f"Seminormality needs k_max >= 3, got {top}")
    report = find_gaps(g, top // 3, backend)
    for gap in report.gaps:
        k = gap.level
        doubled = is_sum_of_k_cuts(g, scale(gap.vector, 2), 2 * k)
        if doubled is None:
            continue
        tripled = is_sum_of_k_cuts(g, scale(gap.vector, 3), 3 * k)
        if tripled is not None:
            logger.info(f"Seminormality violated by {list(gap.vector)} at level {k}")
            return SeminormalityVerdict(verdict="violation", k=k, witness=gap)
    return SeminormalityVerdict(verdict="consistent_up_to", k=top)


def check_very_ample(g: Multigraph) -> tuple[VeryAmpleVerdict, HilbertBasisReport]:
    """Decide very-ampleness from the Hilbert basis at the empty-cut vertex.

    Switchings act transitively on the vertices, so one vertex suffices.

    Raises:
        InternalContradictionError: If switching fails to be transitive
        ResourceLimitError: If the Hilbert basis computation is over its bounds
    """
    if not verify_transitivity(g):
        raise InternalContradictionError("Switching maps do not act transitively on the cuts")
    ld = lattice_description(g)
    generators = sorted({v for v in cut_vectors(g) if any(v)})
    report = hilbert_basis(generators, ld)
    verdict = VeryAmpleVerdict(
        verdict="very_ample" if report.is_subset_of_cuts else "not_very_ample",
        offending=report.offending,
        basis=report.basis,
    )
    return verdict, report
