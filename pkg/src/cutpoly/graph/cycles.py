"""Cut space and cycle space utilities over GF(2)."""

import logging
from collections import deque
from collections.abc import Iterable

from ..exceptions import PreconditionError
from .multigraph import Cut, Multigraph

logger = logging.getLogger(__name__)


def _two_color(g: Multigraph, flipped: frozenset[int]) -> list[int] | None:
    """Side labels that differ exactly across flipped edges, or None.

    Each component is rooted at its smallest vertex, which gets side 0.
    """
    side = [-1] * g.vertex_count
    for root in range(g.vertex_count):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for edge_id, y in g.incidence[x]:
                expected = side[x] ^ (1 if edge_id in flipped else 0)
                if side[y] == -1:
                    side[y] = expected
                    queue.append(y)
                elif side[y] != expected:
                    logger.debug(f"Parity conflict on edge {edge_id} ({x}, {y})")
                    return None
    return side


def recover_cut_from_edgeset(g: Multigraph, e1: Iterable[int]) -> Cut | None:
    """The cut whose crossing edges are exactly e1, if there is one.

    Args:
        g: Graph
        e1: Candidate crossing set

    Returns:
        The canonical cut, or None when some cycle meets e1 an odd number of times
    """
    side = _two_color(g, frozenset(e1))
    if side is None:
        return None
    return Cut.of((v for v, s in enumerate(side) if s == 1), g.vertex_count)


def is_bipartite(g: Multigraph) -> Cut | None:
    """A cut crossing every edge, or None for graphs with an odd cycle.

    Edgeless graphs yield the empty cut.
    """
    return recover_cut_from_edgeset(g, range(g.edge_count))


def is_even_subgraph(g: Multigraph, f: Iterable[int]) -> bool:
    """True iff every vertex has even degree in the edge set f (loops count twice)."""
    degree = [0] * g.vertex_count
    for edge_id in set(f):
        _, u, v = g.edges[edge_id]
        degree[u] += 1
        degree[v] += 1
    return all(d % 2 == 0 for d in degree)


def euler_cycle_decomposition(g: Multigraph, f: Iterable[int]) -> list[tuple[int, ...]]:
    """Split an even edge set into edge-disjoint circuits.

    Walks from the lowest unused edge, always leaving a vertex by its lowest
    unused edge, and peels a circuit off whenever the walk revisits a vertex.

    Args:
        g: Graph
        f: Edge set with even degree at every vertex

    Returns:
        Circuits as edge id tuples in traversal order

    Raises:
        PreconditionError: If f is not an even subgraph
    """
    remaining = set(f)
    if not is_even_subgraph(g, remaining):
        raise PreconditionError("Edge set has a vertex of odd degree")

    circuits: list[tuple[int, ...]] = []
    while remaining:
        start = g.edges[min(remaining)].u
        stack_vertices = [start]
        stack_edges: list[int] = []
        position = {start: 0}
        while True:
            current = stack_vertices[-1]
            step = next(
                ((e, other) for e, other in g.incidence[current] if e in remaining), None
            )
            if step is None:
                # only the start vertex can run dry, and only with an empty trail
                break
            edge_id, other = step
            remaining.discard(edge_id)
            if other in position:
                at = position[other]
                circuits.append(tuple(stack_edges[at:]) + (edge_id,))
                for vertex in stack_vertices[at + 1 :]:
                    del position[vertex]
                del stack_vertices[at + 1 :]
                del stack_edges[at:]
            else:
                position[other] = len(stack_vertices)
                stack_vertices.append(other)
                stack_edges.append(edge_id)
    return circuits


def cycle_basis(g: Multigraph) -> list[frozenset[int]]:
    """Fundamental cycles of a BFS spanning forest, one per non-tree edge.

    Returns:
        Edge id sets ordered by their non-tree edge; m - n + c of them
    """
    parent_edge = [-1] * g.vertex_count
    parent = [-1] * g.vertex_count
    depth = [-1] * g.vertex_count
    tree_edges: set[int] = set()
    for root in range(g.vertex_count):
        if depth[root] != -1:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for edge_id, y in g.incidence[x]:
                if depth[y] == -1:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    parent_edge[y] = edge_id
                    tree_edges.add(edge_id)
                    queue.append(y)

    cycles: list[frozenset[int]] = []
    for edge_id, u, v in g.edges:
        if edge_id in tree_edges:
            continue
        cycle = {edge_id}
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            cycle.add(parent_edge[a])
            a = parent[a]
        cycles.append(frozenset(cycle))
    return cycles
