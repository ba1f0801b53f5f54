"""Switching maps: the affine involutions that move any cut to the empty cut."""

import logging
from dataclasses import dataclass

from .exceptions import PreconditionError
from .graph.multigraph import Cut, Multigraph, crossing_set, cut_vector
from .lattice.membership import all_cuts
from .lattice.vectors import DilatedPoint
from .limits import bounded

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SwitchMap:
    """The switching of a graph along a base cut A|B.

    On cuts it sends C|D to the cut with side A xor C; on points of kP it
    replaces x_e by k - x_e on every edge crossing A|B.
    """

    base_cut: Cut
    crossing_set: frozenset[int]

    @classmethod
    def of(cls, g: Multigraph, base_cut: Cut) -> "SwitchMap":
        return cls(base_cut, crossing_set(g, base_cut))


def switch_cut(s: SwitchMap, c: Cut) -> Cut:
    """Image of c: symmetric difference of the canonical sides, canonicalized.

    Example:
        >>> s = SwitchMap(Cut.of({1}, 3), frozenset({0, 2}))
        >>> switch_cut(s, Cut.of({2}, 3)).sorted_side()
        [1, 2]
    """
    if c.vertex_count != s.base_cut.vertex_count:
        raise PreconditionError(
            f"Cut on {c.vertex_count} vertices switched by a map on {s.base_cut.vertex_count}"
        )
    return Cut.of(s.base_cut.side_a ^ c.side_a, c.vertex_count)


def switch_cut_formula(s: SwitchMap, c: Cut) -> Cut:
    """Image of c by the four-intersection rule (A&D | B&C) | (A&C | B&D)."""
    a, b = s.base_cut.side_a, s.base_cut.side_b
    cc, d = c.side_a, c.side_b
    return Cut.of((a & d) | (b & cc), c.vertex_count)


def switch_point(s: SwitchMap, p: DilatedPoint) -> DilatedPoint:
    """Replace p_e by k - p_e on the crossing edges; the level is unchanged."""
    k = p.level
    vector = tuple(k - x if e in s.crossing_set else x for e, x in enumerate(p.vector))
    return DilatedPoint(vector, k)


@bounded("max_cut_vertices")
def verify_transitivity(g: Multigraph) -> bool:
    """Check that every switching permutes the cuts and sends the empty cut to its base.

    Also cross-checks the symmetric-difference rule against the
    four-intersection rule, and the action on cut vectors.

    Raises:
        ResourceLimitError: If g has more than max_cut_vertices vertices
    """
    cuts = all_cuts(g)
    empty = cuts[0]
    for base in cuts:
        s = SwitchMap.of(g, base)
        images = []
        for c in cuts:
            image = switch_cut(s, c)
            if image != switch_cut_formula(s, c):
                logger.warning(
                    f"Switching rules disagree on {c.sorted_side()} by {base.sorted_side()}"
                )
                return False
            if cut_vector(g, image) != switch_point(s, DilatedPoint(cut_vector(g, c), 1)).vector:
                return False
            images.append(image)
        if len(set(images)) != len(cuts) or switch_cut(s, empty) != base:
            return False
    logger.debug(f"Verified {len(cuts)} switchings on {g.vertex_count} vertices")
    return True
