"""Exhaustive K5-minor search for desk-scale graphs."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from ..limits import bounded
from .multigraph import Multigraph

logger = logging.getLogger(__name__)

BranchSet = frozenset[int]
Adjacency = dict[BranchSet, set[BranchSet]]


@dataclass(frozen=True)
class K5MinorWitness:
    """Five disjoint connected branch sets, pairwise joined by an edge."""

    branch_sets: tuple[tuple[int, ...], ...]


def _order(branch: BranchSet) -> tuple[int, ...]:
    return tuple(sorted(branch))


def _copy(adj: Adjacency) -> Adjacency:
    return {vertex: set(neighbors) for vertex, neighbors in adj.items()}


def _delete_vertex(adj: Adjacency, x: BranchSet) -> None:
    for y in adj.pop(x):
        adj[y].discard(x)


def _contract(adj: Adjacency, x: BranchSet, y: BranchSet) -> None:
    merged = x | y
    neighbors = (adj.pop(x) | adj.pop(y)) - {x, y}
    for z in neighbors:
        adj[z] -= {x, y}
        adj[z].add(merged)
    adj[merged] = neighbors


def _reduce(adj: Adjacency) -> None:
    """Delete vertices of degree <= 1 and contract away degree-2 vertices.

    Neither step changes whether a K5 minor exists: a branch set of K5 needs
    four neighbors, so such vertices are only ever connectors.
    """
    changed = True
    while changed:
        changed = False
        for x in sorted(adj, key=_order):
            degree = len(adj[x])
            if degree <= 1:
                _delete_vertex(adj, x)
                changed = True
                break
            if degree == 2:
                y = min(adj[x], key=_order)
                _contract(adj, x, y)
                changed = True
                break


def _find_k5(adj: Adjacency) -> tuple[BranchSet, ...] | None:
    rich = sorted((x for x in adj if len(adj[x]) >= 4), key=_order)
    for a in rich:
        candidates = sorted(
            (b for b in adj[a] if len(adj[b]) >= 4 and _order(b) > _order(a)), key=_order
        )
        for rest in combinations(candidates, 4):
            if all(q in adj[p] for p, q in combinations(rest, 2)):
                return (a, *rest)
    return None


def _edge_count(adj: Adjacency) -> int:
    return sum(len(n) for n in adj.values()) // 2


def _is_planar(adj: Adjacency) -> bool:
    graph = nx.Graph()
    graph.add_nodes_from(adj)
    graph.add_edges_from((x, y) for x in adj for y in adj[x])
    planar, _ = nx.check_planarity(graph)
    return planar


def _search(adj: Adjacency, failed: set[frozenset[BranchSet]]) -> tuple[BranchSet, ...] | None:
    """Depth-first search over edge contractions.

    A minimal K5 model either has five singleton branch sets, so K5 is a
    subgraph, or some branch set holds an edge whose contraction keeps the
    model. Trying every edge therefore misses nothing. A contracted graph is
    fully determined by its branch sets, which makes them the memo key.
    """
    _reduce(adj)
    if len(adj) < 5 or _edge_count(adj) < 10:
        return None
    key = frozenset(adj)
    if key in failed:
        return None

    found = _find_k5(adj)
    if found is not None:
        return found

    # Minors of planar graphs are planar
    if _is_planar(adj):
        failed.add(key)
        return None

    edges = sorted(
        ((x, y) for x in adj for y in adj[x] if _order(x) < _order(y)),
        key=lambda e: (len(adj[e[0]]) + len(adj[e[1]]), _order(e[0]), _order(e[1])),
    )
    for x, y in edges:
        contracted = _copy(adj)
        _contract(contracted, x, y)
        found = _search(contracted, failed)
        if found is not None:
            return found

    failed.add(key)
    return None


@bounded("max_minor_vertices")
def has_K5_minor(g: Multigraph) -> K5MinorWitness | None:  # noqa: N802
    """Search for a K5 minor, returning its branch sets.

    Branch sets grow by contracting edges. The search tries every edge
    contraction, prunes planar graphs and runs on each block of g separately.

    Args:
        g: Graph (parallel edges are irrelevant to minors)

    Returns:
        Witness with five branch sets, or None when g has no K5 minor

    Raises:
        ResourceLimitError: If g has more than max_minor_vertices vertices
    """
    simple = nx.Graph()
    simple.add_nodes_from(range(g.vertex_count))
    simple.add_edges_from((u, v) for _, u, v in g.edges if u != v)

    failed: set[frozenset[BranchSet]] = set()
    blocks = sorted(sorted(b) for b in nx.biconnected_components(simple))
    for block in blocks:
        if len(block) < 5:
            continue
        members = set(block)
        adj: Adjacency = {
            frozenset([v]): {frozenset([w]) for w in simple[v] if w in members} for v in block
        }
        found = _search(adj, failed)
        if found is not None:
            witness = K5MinorWitness(tuple(sorted(_order(b) for b in found)))
            logger.info(f"K5 minor found with branch sets {witness.branch_sets}")
            return witness
    return None


def verify_k5_witness(g: Multigraph, witness: K5MinorWitness) -> bool:
    """Independently check a K5 minor model against g."""
    sets: Sequence[tuple[int, ...]] = witness.branch_sets
    if len(sets) != 5 or any(not s for s in sets):
        return False
    flat = [v for s in sets for v in s]
    if len(flat) != len(set(flat)) or any(not 0 <= v < g.vertex_count for v in flat):
        return False
    owner = {v: i for i, s in enumerate(sets) for v in s}
    for s in sets:
        members = set(s)
        reached = {s[0]}
        stack = [s[0]]
        while stack:
            x = stack.pop()
            for _, y in g.incidence[x]:
                if y in members and y not in reached:
                    reached.add(y)
                    stack.append(y)
        if reached != members:
            return False
    touching = {
        frozenset((owner[u], owner[v]))
        for _, u, v in g.edges
        if u in owner and v in owner and owner[u] != owner[v]
    }
    return len(touching) == 10
