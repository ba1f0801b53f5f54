"""Loopless multigraphs, cuts, cut vectors and edge contraction."""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, NamedTuple

from ..exceptions import GraphFormatError, PreconditionError
from ..limits import bounded

if TYPE_CHECKING:
    import networkx as nx

logger = logging.getLogger(__name__)

EdgeVector = tuple[int, ...]


class Edge(NamedTuple):
    """An edge with a stable identity."""

    edge_id: int
    u: int
    v: int


@dataclass(frozen=True)
class Multigraph:
    """Multigraph on vertices 0..vertex_count-1 with dense edge ids 0..m-1.

    Parallel edges are allowed. Loops are rejected unless ``allow_loops`` is set,
    which only dual graphs of embeddings with bridges use.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    allow_loops: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise GraphFormatError(f"Negative vertex count {self.vertex_count}")
        for position, edge in enumerate(self.edges):
            if edge.edge_id != position:
                raise GraphFormatError(
                    f"Edge ids must be dense 0..m-1, found {edge.edge_id} at position {position}"
                )
            for endpoint in (edge.u, edge.v):
                if not 0 <= endpoint < self.vertex_count:
                    raise GraphFormatError(
                        f"Edge {edge.edge_id} endpoint {endpoint} out of range "
                        f"0..{self.vertex_count - 1}"
                    )
            if edge.u == edge.v and not self.allow_loops:
                raise GraphFormatError(f"Edge {edge.edge_id} is a loop at vertex {edge.u}")

    @classmethod
    def from_pairs(
        cls, vertex_count: int, pairs: Iterable[Sequence[int]], allow_loops: bool = False
    ) -> "Multigraph":
        """Build a multigraph whose edge ids follow the order of pairs.

        Args:
            vertex_count: Number of vertices
            pairs: Endpoint pairs, one per edge
            allow_loops: Accept loops (dual graphs only)

        Returns:
            The multigraph
        """
        edges = tuple(Edge(i, int(u), int(v)) for i, (u, v) in enumerate(pairs))
        return cls(vertex_count, edges, allow_loops)

    @classmethod
    def from_networkx(cls, graph: "nx.Graph") -> "Multigraph":
        """Convert a networkx graph, relabelling nodes by sorted order.

        Edges are ordered lexicographically by (smaller endpoint, larger endpoint).
        """
        index = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        pairs = sorted(tuple(sorted((index[a], index[b]))) for a, b in graph.edges())
        return cls.from_pairs(len(index), pairs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the (edge_id, other endpoint) pairs in edge id order."""
        adjacent: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for edge_id, u, v in self.edges:
            adjacent[u].append((edge_id, v))
            if u != v:
                adjacent[v].append((edge_id, u))
        return tuple(tuple(a) for a in adjacent)

    def degree(self, vertex: int) -> int:
        return sum(2 if other == vertex else 1 for _, other in self.incidence[vertex])

    def pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for _, u, v in self.edges]


@dataclass(frozen=True)
class Cut:
    """An unordered vertex bipartition A|B in canonical form.

    ``side_a`` is the side not containing vertex 0; the empty side is the
    zero cut.
    """

    side_a: frozenset[int]
    vertex_count: int

    def __post_init__(self) -> None:
        if 0 in self.side_a:
            raise PreconditionError("Canonical cut side must not contain vertex 0")
        if any(not 0 < v < self.vertex_count for v in self.side_a):
            raise PreconditionError(f"Cut side {sorted(self.side_a)} out of range")

    @classmethod
    def of(cls, side: Iterable[int], vertex_count: int) -> "Cut":
        """Canonicalize either side of a bipartition."""
        side_set = frozenset(side)
        if 0 in side_set:
            side_set = frozenset(range(vertex_count)) - side_set
        return cls(side_set, vertex_count)

    @classmethod
    def empty(cls, vertex_count: int) -> "Cut":
        return cls(frozenset(), vertex_count)

    @classmethod
    def from_index(cls, index: int, vertex_count: int) -> "Cut":
        """The cut at position ``index`` of enumerate_cuts (bit i = vertex i+1)."""
        return cls(
            frozenset(v for v in range(1, vertex_count) if index >> (v - 1) & 1), vertex_count
        )

    @cached_property
    def mask(self) -> int:
        """Bitmask of side_a over all vertices."""
        return sum(1 << v for v in self.side_a)

    @property
    def index(self) -> int:
        """Position of this cut in enumerate_cuts order."""
        return self.mask >> 1

    @property
    def side_b(self) -> frozenset[int]:
        return frozenset(range(self.vertex_count)) - self.side_a

    def separates(self, u: int, v: int) -> bool:
        return ((self.mask >> u) ^ (self.mask >> v)) & 1 == 1

    def sorted_side(self) -> list[int]:
        return sorted(self.side_a)


@dataclass(frozen=True)
class ContractionResult:
    """Outcome of contracting an edge set."""

    contracted: Multigraph
    vertex_map: tuple[int, ...]
    edge_map: dict[int, int]
    loops_created: tuple[int, ...]


@bounded("max_cut_vertices")
def enumerate_cuts(g: Multigraph) -> list[Cut]:
    """All 2^(n-1) cuts of g in binary counting order over subsets of V minus {0}.

    Args:
        g: Graph with at least one vertex

    Returns:
        Canonical cuts, the empty cut first

    Raises:
        PreconditionError: If g has no vertices
        ResourceLimitError: If n exceeds max_cut_vertices
    """
    if g.vertex_count < 1:
        raise PreconditionError("Cut enumeration needs at least one vertex")
    n = g.vertex_count
    return [Cut.from_index(i, n) for i in range(1 << (n - 1))]


def cut_vector(g: Multigraph, c: Cut) -> EdgeVector:
    """The 0/1 vector with 1 on edges separated by the cut."""
    if c.vertex_count != g.vertex_count:
        raise PreconditionError(
            f"Cut on {c.vertex_count} vertices used with a graph on {g.vertex_count}"
        )
    mask = c.mask
    return tuple(((mask >> u) ^ (mask >> v)) & 1 for _, u, v in g.edges)


def crossing_set(g: Multigraph, c: Cut) -> frozenset[int]:
    """Edge ids separated by the cut."""
    return frozenset(e for e, bit in enumerate(cut_vector(g, c)) if bit)


def contract_edges(g: Multigraph, e0: Iterable[int]) -> ContractionResult:
    """Contract an edge set, reporting (not failing on) edges that become loops.

    Merged vertex classes are numbered by their smallest original vertex, so
    vertex 0 always maps to 0. Surviving edges keep their relative id order.

    Args:
        g: Graph to contract
        e0: Edge ids to contract

    Returns:
        ContractionResult with the contracted multigraph, the vertex and edge
        maps, and the surviving edges that collapsed to loops
    """
    contract = set(e0)
    unknown = [e for e in contract if not 0 <= e < g.edge_count]
    if unknown:
        raise PreconditionError(f"Edge ids {sorted(unknown)} not in graph")

    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in sorted(contract):
        _, u, v = g.edges[e]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    # Roots are class minima, so numbering roots in order numbers classes by min vertex
    root_index: dict[int, int] = {}
    for vertex in range(g.vertex_count):
        root = find(vertex)
        if root not in root_index:
            root_index[root] = len(root_index)
    vertex_map = tuple(root_index[find(v)] for v in range(g.vertex_count))

    pairs: list[tuple[int, int]] = []
    edge_map: dict[int, int] = {}
    loops: list[int] = []
    for edge_id, u, v in g.edges:
        if edge_id in contract:
            continue
        a, b = vertex_map[u], vertex_map[v]
        if a == b:
            loops.append(edge_id)
            continue
        edge_map[edge_id] = len(pairs)
        pairs.append((a, b))

    contracted = Multigraph.from_pairs(len(root_index), pairs)
    logger.debug(
        f"Contracted {len(contract)} edges: {g.vertex_count} -> {contracted.vertex_count} "
        f"vertices, {len(loops)} loops"
    )
    return ContractionResult(contracted, vertex_map, edge_map, tuple(loops))


def lift_cut(c: Cut, vertex_map: Sequence[int]) -> Cut:
    """Pull a cut of a contracted graph back along its vertex map."""
    return Cut.of((v for v, image in enumerate(vertex_map) if image in c.side_a), len(vertex_map))


def components(g: Multigraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.vertex_count
    result: list[list[int]] = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        component = []
        while stack:
            x = stack.pop()
            component.append(x)
            for _, y in g.incidence[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        result.append(sorted(component))
    return result


def induced_subgraph(g: Multigraph, vertices: Sequence[int]) -> tuple[Multigraph, list[int]]:
    """Subgraph induced by vertices, relabelled in the given order.

    Returns:
        The subgraph and, for each of its edges, the original edge id
    """
    index = {v: i for i, v in enumerate(vertices)}
    pairs = []
    original = []
    for edge_id, u, v in g.edges:
        if u in index and v in index:
            pairs.append((index[u], index[v]))
            original.append(edge_id)
    return Multigraph.from_pairs(len(vertices), pairs, g.allow_loops), original
