"""Four-colorings of planar multigraphs."""

import logging
from dataclasses import dataclass

from ..exceptions import InternalContradictionError, NotPlanarError, PreconditionError
from .multigraph import Multigraph
from .planar import is_planar

logger = logging.getLogger(__name__)

COLORS = (1, 2, 3, 4)


@dataclass(frozen=True)
class Coloring4:
    """Vertex colors in {1, 2, 3, 4}; classes may be empty."""

    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        bad = [c for c in self.colors if c not in COLORS]
        if bad:
            raise PreconditionError(f"Colors must be in 1..4, got {sorted(set(bad))}")

    def classes(self) -> tuple[frozenset[int], ...]:
        """The four color classes V1..V4."""
        return tuple(
            frozenset(v for v, c in enumerate(self.colors) if c == color) for color in COLORS
        )


def is_proper_coloring(g: Multigraph, coloring: Coloring4) -> bool:
    """True iff the coloring covers g and no edge is monochromatic."""
    if len(coloring.colors) != g.vertex_count:
        return False
    return all(coloring.colors[u] != coloring.colors[v] for _, u, v in g.edges)


def four_color(g: Multigraph) -> Coloring4:
    """Proper coloring of a planar loopless multigraph with at most four colors.

    Exact backtracking: the next vertex has the largest saturation (distinct
    neighbor colors), ties going to the lowest index; colors are tried lowest first.

    Raises:
        PreconditionError: If g has a loop
        NotPlanarError: If g is not planar
        InternalContradictionError: If the search fails on a planar graph
    """
    if any(u == v for _, u, v in g.edges):
        raise PreconditionError("Cannot color a graph with loops")
    if is_planar(g) is None:
        raise NotPlanarError("four_color requires a planar graph")

    n = g.vertex_count
    neighbors = [sorted({other for _, other in g.incidence[v]}) for v in range(n)]
    colors = [0] * n

    def saturation(v: int) -> int:
        return len({colors[w] for w in neighbors[v]} - {0})

    def extend(colored: int) -> bool:
        if colored == n:
            return True
        vertex = min(
            (v for v in range(n) if colors[v] == 0), key=lambda v: (-saturation(v), v)
        )
        used = {colors[w] for w in neighbors[vertex]}
        for color in COLORS:
            if color in used:
                continue
            colors[vertex] = color
            if extend(colored + 1):
                return True
        colors[vertex] = 0
        return False

    if not extend(0):
        raise InternalContradictionError(
            f"No four-coloring found for a planar graph on {n} vertices"
        )
    coloring = Coloring4(tuple(colors))
    logger.debug(f"Four-colored {n} vertices using {len(set(colors))} colors")
    return coloring
