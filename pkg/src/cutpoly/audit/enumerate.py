"""Lattice points of dilated cut polytopes and their decompositions into cuts."""

import logging
from collections.abc import Sequence
from fractions import Fraction
from itertools import product
from typing import Any

from ..exceptions import PreconditionError
from ..graph.cycles import cycle_basis
from ..graph.multigraph import Cut, EdgeVector, Multigraph
from ..lattice.membership import LatticeDescription, all_cuts, cut_vectors, in_dilation
from ..lattice.simplex import lp_member_convex
from ..lattice.vectors import DilatedPoint, check_dimension, vector_sum
from ..limits import check_limit, get_limits, use_limits
from ..parallel import ExecutionBackend, get_backend

logger = logging.getLogger(__name__)


def is_sum_of_k_cuts(g: Multigraph, x: Sequence[int], k: int) -> list[Cut] | None:
    """Find k cuts (repetition and the empty cut allowed) whose vectors sum to x.

    Depth-first over non-decreasing cut indices; a branch is cut off as soon
    as the residual goes negative or exceeds the number of cuts still to place.
    A residual with an odd cycle sum can never be reached, since every cut
    vector has even sum over every cycle.

    Args:
        g: Graph
        x: Integer edge vector
        k: Number of cuts

    Returns:
        The lexicographically first such list of cuts, or None

    Raises:
        ResourceLimitError: If g has more than max_cut_vertices vertices
    """
    check_dimension(x, g.edge_count)
    if k < 0:
        raise PreconditionError(f"k must be >= 0, got {k}")
    target = tuple(int(v) for v in x)
    if any(not 0 <= v <= k for v in target):
        return None
    cuts = all_cuts(g)
    if any(sum(target[e] for e in cycle) % 2 for cycle in cycle_basis(g)):
        logger.debug(f"Residual {list(target)} fails the cycle parity rule")
        return None
    vectors = cut_vectors(g)
    chosen: list[int] = []

    def search(start: int, remaining: int, residual: tuple[int, ...]) -> bool:
        if remaining == 0:
            return not any(residual)
        if max(residual, default=0) > remaining:
            return False
        for index in range(start, len(vectors)):
            rest = tuple(r - v for r, v in zip(residual, vectors[index], strict=True))
            if min(rest, default=0) < 0:
                continue
            chosen.append(index)
            if search(index, remaining - 1, rest):
                return True
            chosen.pop()
        return False

    if not search(0, k, target):
        return None
    found = [cuts[i] for i in chosen]
    assert vector_sum((vectors[i] for i in chosen), g.edge_count) == target
    return found


def _classify_from(
    g: Multigraph, ld: LatticeDescription, k: int, prefix: tuple[int, ...]
) -> list[tuple[EdgeVector, bool]]:
    """Lattice points of kP extending prefix, each flagged as decomposable or a gap."""
    m = g.edge_count
    # Each parity constraint is checked once its largest edge has a value
    closing: list[list[frozenset[int]]] = [[] for _ in range(m)]
    for cycle in ld.parity_constraints:
        closing[max(cycle)].append(cycle)
    generators = cut_vectors(g)
    x = list(prefix) + [0] * (m - len(prefix))
    found: list[tuple[EdgeVector, bool]] = []

    def parity_ok(i: int) -> bool:
        return all(sum(x[e] for e in cycle) % 2 == 0 for cycle in closing[i])

    def visit(i: int) -> None:
        if i == m:
            point = tuple(x)
            if is_sum_of_k_cuts(g, point, k) is not None:
                found.append((point, True))
            elif lp_member_convex(generators, [Fraction(v, k) for v in point]):
                found.append((point, False))
            return
        for value in range(k + 1):
            x[i] = value
            if parity_ok(i):
                visit(i + 1)
        x[i] = 0

    if all(parity_ok(i) for i in range(len(prefix))):
        visit(len(prefix))
    return found


def _classify_task(
    g: Multigraph,
    ld: LatticeDescription,
    k: int,
    prefix: tuple[int, ...],
    limits: dict[str, int],
) -> list[list[Any]]:
    with use_limits(**limits):
        classified = _classify_from(g, ld, k, prefix)
    return [[list(point), decomposable] for point, decomposable in classified]


def classify_lattice_points(
    g: Multigraph,
    ld: LatticeDescription,
    k: int,
    backend: ExecutionBackend | None = None,
) -> tuple[list[EdgeVector], list[EdgeVector]]:
    """All lattice points of kP, and those among them that are gaps.

    The box [0, k]^m is split by the value of the first edge, one task per
    value; merged results are sorted, so they do not depend on the backend.

    Args:
        g: Graph
        ld: Its lattice description
        k: Dilation level (>= 1)
        backend: Execution backend (default: get_backend())

    Returns:
        (points, gaps), both sorted lexicographically

    Raises:
        ResourceLimitError: If (k + 1)^m exceeds max_box_points
    """
    if k < 1:
        raise PreconditionError(f"Dilation level must be >= 1, got {k}")
    check_limit("max_box_points", (k + 1) ** g.edge_count)
    cut_vectors(g)  # fail fast on the vertex bound

    prefixes = [(value,) for value in range(k + 1)] if g.edge_count else [()]
    limits = get_limits().model_dump()
    tasks = [(g, ld, k, prefix, limits) for prefix in prefixes]
    owned = backend is None
    runner = get_backend() if backend is None else backend
    try:
        chunks = runner.map(_classify_task, tasks)
    finally:
        if owned:
            runner.close()

    points: list[EdgeVector] = []
    gaps: list[EdgeVector] = []
    for chunk in chunks:
        for point, decomposable in chunk:
            points.append(tuple(point))
            if not decomposable:
                gaps.append(tuple(point))
    points.sort()
    gaps.sort()
    logger.info(f"Level {k}: {len(points)} lattice points, {len(gaps)} gaps")
    return points, gaps


def enumerate_lattice_points(
    g: Multigraph,
    ld: LatticeDescription,
    k: int,
    backend: ExecutionBackend | None = None,
) -> list[EdgeVector]:
    """All x in [0, k]^m lying in the cut lattice and in kP, sorted.

    Raises:
        ResourceLimitError: If (k + 1)^m exceeds max_box_points
    """
    return classify_lattice_points(g, ld, k, backend)[0]


def naive_lattice_points(g: Multigraph, ld: LatticeDescription, k: int) -> list[EdgeVector]:
    """Unpruned scan of the whole box [0, k]^m, one membership test per point."""
    check_limit("max_box_points", (k + 1) ** g.edge_count)
    return [
        point
        for point in product(range(k + 1), repeat=g.edge_count)
        if in_dilation(g, ld, DilatedPoint(point, k))
    ]
