"""Planar embeddings as rotation systems, face tracing and dual graphs."""

import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from ..exceptions import InternalContradictionError, PreconditionError
from .multigraph import Multigraph, components

logger = logging.getLogger(__name__)

# (edge_id, direction): direction 0 runs u -> v, 1 runs v -> u
Dart = tuple[int, int]


@dataclass(frozen=True)
class PlanarEmbedding:
    """Rotation system plus the faces it traces.

    ``rotation[v]`` lists the darts leaving v in cyclic order. Each vertex
    without edges contributes one empty face.
    """

    rotation: tuple[tuple[Dart, ...], ...]
    faces: tuple[tuple[Dart, ...], ...]

    @property
    def face_count(self) -> int:
        return len(self.faces)

    def face_of_dart(self) -> dict[Dart, int]:
        return {dart: index for index, face in enumerate(self.faces) for dart in face}


@dataclass(frozen=True)
class DualMap:
    """Dual multigraph with the primal-to-dual edge bijection."""

    dual: Multigraph
    edge_bijection: tuple[int, ...]


def _tail(g: Multigraph, dart: Dart) -> int:
    edge = g.edges[dart[0]]
    return edge.u if dart[1] == 0 else edge.v


def trace_faces(
    g: Multigraph, rotation: Sequence[Sequence[Dart]]
) -> tuple[tuple[Dart, ...], ...]:
    """Trace the face boundary walks of a rotation system.

    The dart after d is the rotation successor, at d's head, of the reverse of d.
    """
    successor: dict[Dart, Dart] = {}
    for darts in rotation:
        for i, dart in enumerate(darts):
            successor[dart] = darts[(i + 1) % len(darts)]

    faces: list[tuple[Dart, ...]] = []
    visited: set[Dart] = set()
    for edge_id in range(g.edge_count):
        for direction in (0, 1):
            start = (edge_id, direction)
            if start in visited:
                continue
            walk = []
            dart = start
            while dart not in visited:
                visited.add(dart)
                walk.append(dart)
                dart = successor[(dart[0], 1 - dart[1])]
            faces.append(tuple(walk))
    faces.extend(() for darts in rotation if not darts)
    return tuple(faces)


def satisfies_euler(g: Multigraph, embedding: PlanarEmbedding) -> bool:
    """Check |V| - |E| + |F| = 2 on every connected component."""
    if trace_faces(g, embedding.rotation) != embedding.faces:
        return False
    component_of = {}
    for index, vertices in enumerate(components(g)):
        for v in vertices:
            component_of[v] = index
    vertex_total: dict[int, int] = defaultdict(int)
    edge_total: dict[int, int] = defaultdict(int)
    face_total: dict[int, int] = defaultdict(int)
    for v, index in component_of.items():
        vertex_total[index] += 1
        if not embedding.rotation[v]:
            face_total[index] += 1
    for _, u, _ in g.edges:
        edge_total[component_of[u]] += 1
    for face in embedding.faces:
        if face:
            face_total[component_of[_tail(g, face[0])]] += 1
    return all(
        vertex_total[c] - edge_total[c] + face_total[c] == 2 for c in vertex_total
    )


def is_planar(g: Multigraph) -> PlanarEmbedding | None:
    """Planar embedding of g, or None if g is not planar.

    networkx embeds the underlying simple graph; each bundle of parallel edges
    is spread into nested digons, with ascending ids at the smaller endpoint and
    descending ids at the larger one. Loops go last, both darts adjacent.

    Raises:
        InternalContradictionError: If the built rotation system fails Euler's formula
    """
    simple = nx.Graph()
    simple.add_nodes_from(range(g.vertex_count))
    bundles: dict[tuple[int, int], list[int]] = defaultdict(list)
    loops: dict[int, list[int]] = defaultdict(list)
    for edge_id, u, v in g.edges:
        if u == v:
            loops[u].append(edge_id)
        else:
            simple.add_edge(u, v)
            bundles[(min(u, v), max(u, v))].append(edge_id)

    planar, nx_embedding = nx.check_planarity(simple)
    if not planar:
        logger.debug(f"Graph on {g.vertex_count} vertices is not planar")
        return None

    rotation: list[tuple[Dart, ...]] = []
    for vertex in range(g.vertex_count):
        darts: list[Dart] = []
        neighbors = list(nx_embedding.neighbors_cw_order(vertex)) if simple.degree(vertex) else []
        for neighbor in neighbors:
            bundle = bundles[(min(vertex, neighbor), max(vertex, neighbor))]
            ordered = bundle if vertex < neighbor else list(reversed(bundle))
            for edge_id in ordered:
                darts.append((edge_id, 0 if g.edges[edge_id].u == vertex else 1))
        for edge_id in loops[vertex]:
            darts.extend([(edge_id, 0), (edge_id, 1)])
        rotation.append(tuple(darts))

    embedding = PlanarEmbedding(tuple(rotation), trace_faces(g, rotation))
    if not satisfies_euler(g, embedding):
        raise InternalContradictionError("Rotation system from planarity test violates Euler")
    return embedding


def dual_graph(g: Multigraph, emb: PlanarEmbedding) -> DualMap:
    """Dual multigraph: one vertex per face, one edge per primal edge.

    Bridges become loops. Dual edge i corresponds to primal edge i.

    Raises:
        PreconditionError: If g is disconnected
    """
    if len(components(g)) > 1:
        raise PreconditionError("Dual graph needs a connected graph")
    face_of = emb.face_of_dart()
    pairs = [(face_of[(edge_id, 0)], face_of[(edge_id, 1)]) for edge_id in range(g.edge_count)]
    dual = Multigraph.from_pairs(emb.face_count, pairs, allow_loops=True)
    return DualMap(dual, tuple(range(g.edge_count)))
