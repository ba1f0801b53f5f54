"""Decompose lattice points of k * Cut(G), k <= 3, of planar graphs into k cuts."""

import logging
from collections.abc import Callable, Sequence

from .exceptions import InternalContradictionError, NotPlanarError, PreconditionError
from .graph.coloring import Coloring4, four_color, is_proper_coloring
from .graph.cycles import is_even_subgraph, recover_cut_from_edgeset
from .graph.multigraph import (
    Cut,
    EdgeVector,
    Multigraph,
    components,
    contract_edges,
    cut_vector,
    induced_subgraph,
    lift_cut,
)
from .graph.planar import dual_graph, is_planar
from .lattice.membership import lattice_description, require_in_dilation
from .lattice.vectors import DilatedPoint, check_dimension, support, vector_sum
from .switching import SwitchMap, switch_cut, switch_point

logger = logging.getLogger(__name__)

Measure = tuple[int, int]
Finisher = Callable[[Multigraph, EdgeVector], list[Cut]]


def balanced_three_cuts(g: Multigraph, coloring: Coloring4) -> list[Cut]:
    """The cuts V1+V2 | V3+V4, V1+V3 | V2+V4 and V1+V4 | V2+V3 of a proper coloring.

    Each edge joins two different classes, so exactly two of the three cuts
    cross it and the vectors sum to the all-2 vector.

    Raises:
        PreconditionError: If the coloring is not proper on g
    """
    if not is_proper_coloring(g, coloring):
        raise PreconditionError("balanced_three_cuts needs a proper coloring")
    v1, v2, v3, v4 = coloring.classes()
    n = g.vertex_count
    cuts = [Cut.of(v1 | v2, n), Cut.of(v1 | v3, n), Cut.of(v1 | v4, n)]
    assert vector_sum((cut_vector(g, c) for c in cuts), g.edge_count) == (2,) * g.edge_count
    return cuts


def four_coloring_from_decomposition(g: Multigraph, cuts: Sequence[Cut]) -> Coloring4:
    """Color v by its sides in the first two of three cuts summing to the all-2 vector.

    Every edge is crossed by two of the three cuts, hence by the first or the
    second, so the coloring is proper.

    Raises:
        PreconditionError: If there are not three cuts summing to (2, ..., 2)
    """
    if len(cuts) != 3:
        raise PreconditionError(f"Expected 3 cuts, got {len(cuts)}")
    total = vector_sum((cut_vector(g, c) for c in cuts), g.edge_count)
    if total != (2,) * g.edge_count:
        raise PreconditionError(f"Cuts sum to {list(total)}, not the all-2 vector")
    first, second = cuts[0].side_a, cuts[1].side_a
    coloring = Coloring4(
        tuple(1 + 2 * (v in first) + (v in second) for v in range(g.vertex_count))
    )
    assert is_proper_coloring(g, coloring)
    return coloring


def _dual_parity_holds(g: Multigraph, e1: Sequence[int]) -> bool:
    """E1 maps to an even subgraph of the dual (cut/cycle duality)."""
    embedding = is_planar(g)
    if embedding is None or len(components(g)) > 1:
        return True
    dual = dual_graph(g, embedding)
    return is_even_subgraph(dual.dual, [dual.edge_bijection[e] for e in e1])


def _reduce(
    g: Multigraph, p: EdgeVector, k: int, finish: Finisher, previous: Measure | None = None
) -> list[Cut]:
    """Contract the zero entries, switch away the entries equal to k, then finish.

    Every recursive call strictly decreases (edge count, entries equal to k).
    """
    n, m = g.vertex_count, g.edge_count
    measure = (m, sum(1 for x in p if x == k))
    assert previous is None or measure < previous, f"Recursion measure {measure} >= {previous}"
    if m == 0:
        return [Cut.empty(n) for _ in range(k)]

    zeros = [e for e, x in enumerate(p) if x == 0]
    if zeros:
        result = contract_edges(g, zeros)
        if result.loops_created:
            raise InternalContradictionError(
                f"Contracting zero edges turned edges {list(result.loops_created)} into loops"
            )
        reduced = [0] * result.contracted.edge_count
        for edge_id, image in result.edge_map.items():
            reduced[image] = p[edge_id]
        logger.debug(f"Contracted {len(zeros)} zero edges: {m} -> {len(reduced)} edges")
        cuts = _reduce(result.contracted, tuple(reduced), k, finish, measure)
        return [lift_cut(c, result.vertex_map) for c in cuts]

    full = next((e for e, x in enumerate(p) if x == k), None)
    if full is not None:
        _, u, v = g.edges[full]
        s = SwitchMap.of(g, Cut.of({min(u, v)}, n))
        switched = switch_point(s, DilatedPoint(p, k)).vector
        logger.debug(f"Switching at vertex {min(u, v)} to clear edge {full}")
        cuts = _reduce(g, switched, k, finish, measure)
        return [switch_cut(s, c) for c in cuts]

    return finish(g, p)


def _finish_three(g: Multigraph, p: EdgeVector) -> list[Cut]:
    """All entries are 1 or 2: switch the 1s to 2s and use a four-coloring."""
    e1 = [e for e, x in enumerate(p) if x == 1]
    base = recover_cut_from_edgeset(g, e1)
    if base is None:
        raise InternalContradictionError(f"Edges {e1} of value 1 do not form a cut")
    assert _dual_parity_holds(g, e1), "Value-1 edges are not an even subgraph of the dual"
    s = SwitchMap.of(g, base)
    return [switch_cut(s, c) for c in balanced_three_cuts(g, four_color(g))]


def _finish_two(g: Multigraph, p: EdgeVector) -> list[Cut]:
    """All entries are 1, so g is bipartite and the bipartition plus the empty cut works."""
    bipartition = recover_cut_from_edgeset(g, range(g.edge_count))
    if bipartition is None:
        raise InternalContradictionError("All-ones residual on a graph with an odd cycle")
    return [bipartition, Cut.empty(g.vertex_count)]


def _per_component(
    g: Multigraph, p: EdgeVector, k: int, solve: Callable[[Multigraph, EdgeVector], list[Cut]]
) -> list[Cut]:
    parts = components(g)
    if len(parts) <= 1:
        return solve(g, p)
    sides: list[set[int]] = [set() for _ in range(k)]
    for part in parts:
        sub, original = induced_subgraph(g, part)
        cuts = solve(sub, tuple(p[e] for e in original))
        for side, c in zip(sides, cuts, strict=True):
            side.update(part[v] for v in c.side_a)
    return [Cut.of(side, g.vertex_count) for side in sides]


def _check_planar_input(g: Multigraph, p: Sequence[int], k: int) -> EdgeVector:
    check_dimension(p, g.edge_count)
    if any(u == v for _, u, v in g.edges):
        raise PreconditionError("Decomposition needs a loopless graph")
    if is_planar(g) is None:
        raise NotPlanarError(f"decompose{k} requires a planar graph")
    point = tuple(int(x) for x in p)
    require_in_dilation(g, lattice_description(g), DilatedPoint(point, k))
    return point


def _checked(g: Multigraph, p: EdgeVector, cuts: list[Cut]) -> list[Cut]:
    total = vector_sum((cut_vector(g, c) for c in cuts), g.edge_count)
    assert total == p, f"Decomposition sums to {list(total)}, not {list(p)}"
    return cuts


def decompose3_planar(g: Multigraph, p: Sequence[int]) -> list[Cut]:
    """Three cuts whose vectors sum to a lattice point p of 3 * Cut(g).

    Args:
        g: Planar loopless multigraph
        p: Lattice point of 3 * Cut(g)

    Returns:
        Three canonical cuts

    Raises:
        NotPlanarError: If g is not planar
        NotInDilationError: If p is not a lattice point of 3P
        InternalContradictionError: If a step ruled out by membership is reached
    """
    point = _check_planar_input(g, p, 3)
    cuts = _per_component(g, point, 3, lambda h, q: _reduce(h, q, 3, _finish_three))
    return _checked(g, point, cuts)


def decompose2_planar(g: Multigraph, p: Sequence[int]) -> list[Cut]:
    """Two cuts whose vectors sum to a lattice point p of 2 * Cut(g).

    Raises:
        NotPlanarError: If g is not planar
        NotInDilationError: If p is not a lattice point of 2P
        InternalContradictionError: If a step ruled out by membership is reached
    """
    point = _check_planar_input(g, p, 2)
    cuts = _per_component(g, point, 2, lambda h, q: _reduce(h, q, 2, _finish_two))
    return _checked(g, point, cuts)


def decompose1(g: Multigraph, p: Sequence[int]) -> Cut:
    """The cut whose vector is p.

    Raises:
        NotInDilationError: If p is not a lattice point of P
    """
    check_dimension(p, g.edge_count)
    point = tuple(int(x) for x in p)
    require_in_dilation(g, lattice_description(g), DilatedPoint(point, 1))
    cut = recover_cut_from_edgeset(g, support(point))
    if cut is None or cut_vector(g, cut) != point:
        raise PreconditionError(f"No cut has vector {list(point)}")
    return cut


def decompose_planar(g: Multigraph, p: Sequence[int], k: int) -> list[Cut]:
    """Dispatch to decompose1, decompose2_planar or decompose3_planar.

    Raises:
        PreconditionError: If k is not 1, 2 or 3
    """
    if k == 1:
        return [decompose1(g, p)]
    if k == 2:
        return decompose2_planar(g, p)
    if k == 3:
        return decompose3_planar(g, p)
    raise PreconditionError(f"Constructive decomposition covers k = 1, 2, 3; got k = {k}")
