"""Tests for constructive decompositions of planar lattice points into cuts."""

import random

import networkx as nx
import pytest

from cutpoly.decompose import (
    balanced_three_cuts,
    decompose1,
    decompose2_planar,
    decompose3_planar,
    decompose_planar,
    four_coloring_from_decomposition,
)
from cutpoly.exceptions import (
    DimensionMismatchError,
    NotInDilationError,
    NotPlanarError,
    PreconditionError,
)
from cutpoly.graph.coloring import Coloring4, four_color
from cutpoly.graph.multigraph import Cut, Multigraph, cut_vector, enumerate_cuts
from cutpoly.lattice.vectors import DilatedPoint, vector_sum
from cutpoly.switching import SwitchMap, switch_cut, switch_point


def total(g, cuts):
    return vector_sum((cut_vector(g, c) for c in cuts), g.edge_count)


def random_point(g, k, rng):
    """Sum of k random cuts of g."""
    cuts = enumerate_cuts(g)
    return total(g, [rng.choice(cuts) for _ in range(k)])


class TestDecompose3Planar:
    """Tests for decompose3_planar."""

    def test_triangle_all_twos(self, k3):
        """(2, 2, 2) on K3 splits into the three nonzero cuts."""
        cuts = decompose3_planar(k3, (2, 2, 2))
        assert len(cuts) == 3
        assert sorted(c.sorted_side() for c in cuts) == [[1], [1, 2], [2]]

    def test_zero_point(self, k4):
        """The zero point is three empty cuts."""
        assert decompose3_planar(k4, (0,) * 6) == [Cut.empty(4)] * 3

    def test_odd_triangle_not_in_lattice(self, k3):
        """An odd sum around a triangle fails the lattice test."""
        with pytest.raises(NotInDilationError) as exc_info:
            decompose3_planar(k3, (1, 1, 1))
        assert exc_info.value.reason == "not in lattice"
        assert exc_info.value.k == 3

    def test_outside_polytope(self, k3):
        """(3, 3, 2) is in the lattice but breaks the perimeter bound."""
        with pytest.raises(NotInDilationError) as exc_info:
            decompose3_planar(k3, (3, 3, 2))
        assert exc_info.value.reason == "not in polytope"

    def test_nonplanar_rejected(self, k5):
        """K5 is not planar."""
        with pytest.raises(NotPlanarError):
            decompose3_planar(k5, (2,) * 10)

    def test_dimension_checked(self, k3):
        """One entry per edge is required."""
        with pytest.raises(DimensionMismatchError):
            decompose3_planar(k3, (2, 2))

    def test_disconnected_graph(self):
        """Components are decomposed separately and recombined."""
        g = Multigraph.from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        p = (2, 2, 2, 0, 2, 2)
        cuts = decompose3_planar(g, p)
        assert total(g, cuts) == p

    def test_parallel_edges(self):
        """Parallel edges take equal values and are handled together."""
        g = Multigraph.from_pairs(3, [(0, 1), (0, 1), (1, 2), (0, 2)])
        p = (2, 2, 2, 2)
        assert total(g, decompose3_planar(g, p)) == p

    @pytest.mark.parametrize("seed", range(5))
    def test_random_points(self, grid, k4, bowtie, seed):
        """Random sums of three cuts come back as three cuts with the same sum."""
        rng = random.Random(seed)
        for g in (grid, k4, bowtie):
            p = random_point(g, 3, rng)
            cuts = decompose3_planar(g, p)
            assert len(cuts) == 3
            assert total(g, cuts) == p

    @pytest.mark.parametrize("seed", range(5))
    def test_switched_decomposition_transfers(self, grid, k4, bowtie, seed):
        """Switching back the cuts of the switched point decomposes the point."""
        rng = random.Random(seed)
        for g in (grid, k4, bowtie):
            p = random_point(g, 3, rng)
            s = SwitchMap.of(g, rng.choice(enumerate_cuts(g)))
            switched = switch_point(s, DilatedPoint(p, 3)).vector
            cuts = [switch_cut(s, c) for c in decompose3_planar(g, switched)]
            assert len(cuts) == 3
            assert total(g, cuts) == p

    def test_octahedron_all_twos(self):
        """The all-2 point of a planar graph needs a four-coloring."""
        g = Multigraph.from_networkx(nx.octahedral_graph())
        p = (2,) * g.edge_count
        assert total(g, decompose3_planar(g, p)) == p


class TestDecompose2Planar:
    """Tests for decompose2_planar."""

    def test_even_cycle(self, c4):
        """(2, 2, 2, 2) on C4 is twice the bipartition."""
        cuts = decompose2_planar(c4, (2, 2, 2, 2))
        assert cuts == [Cut.of({1, 3}, 4)] * 2

    def test_all_ones_on_even_cycle(self, c4):
        """(1, 1, 1, 1) is the bipartition plus the empty cut."""
        cuts = decompose2_planar(c4, (1, 1, 1, 1))
        assert total(c4, cuts) == (1, 1, 1, 1)

    def test_all_ones_on_odd_cycle(self, c5):
        """An odd cycle has no all-ones point at level 2."""
        with pytest.raises(NotInDilationError):
            decompose2_planar(c5, (1,) * 5)

    @pytest.mark.parametrize("seed", range(5))
    def test_random_points(self, grid, k4, c5, seed):
        """Random sums of two cuts come back as two cuts with the same sum."""
        rng = random.Random(seed)
        for g in (grid, k4, c5):
            p = random_point(g, 2, rng)
            assert total(g, decompose2_planar(g, p)) == p


class TestDecompose1:
    """Tests for decompose1."""

    def test_cut_vector(self, k3):
        """A cut vector gives back its cut."""
        assert decompose1(k3, (1, 0, 1)) == Cut.of({1}, 3)

    def test_not_a_cut(self, k3):
        """(1, 1, 1) is no cut of K3."""
        with pytest.raises(NotInDilationError):
            decompose1(k3, (1, 1, 1))

    def test_nonplanar_graphs_allowed(self, k5):
        """Level 1 does not need planarity."""
        c = Cut.of({1, 2}, 5)
        assert decompose1(k5, cut_vector(k5, c)) == c


class TestDecomposePlanar:
    """Tests for decompose_planar."""

    def test_dispatch(self, k3):
        """Each level returns that many cuts."""
        assert len(decompose_planar(k3, (1, 0, 1), 1)) == 1
        assert len(decompose_planar(k3, (2, 0, 2), 2)) == 2
        assert len(decompose_planar(k3, (2, 2, 2), 3)) == 3

    def test_level_four_rejected(self, k3):
        """Only levels 1 to 3 are constructive."""
        with pytest.raises(PreconditionError):
            decompose_planar(k3, (2, 2, 2), 4)


class TestFourColoringCorrespondence:
    """Tests for balanced_three_cuts and four_coloring_from_decomposition."""

    def test_round_trip_keeps_classes(self, k4):
        """Coloring to cuts to coloring keeps the color classes."""
        coloring = four_color(k4)
        recovered = four_coloring_from_decomposition(k4, balanced_three_cuts(k4, coloring))
        assert set(recovered.classes()) == set(coloring.classes())

    def test_two_colored_cycle(self, c4):
        """With two colors the cuts are the bipartition twice plus the empty cut."""
        cuts = balanced_three_cuts(c4, Coloring4((1, 2, 1, 2)))
        assert sorted(c.sorted_side() for c in cuts) == [[], [1, 3], [1, 3]]

    def test_improper_coloring_rejected(self, k3):
        """A monochromatic edge is rejected."""
        with pytest.raises(PreconditionError):
            balanced_three_cuts(k3, Coloring4((1, 1, 2)))

    def test_cuts_must_sum_to_twos(self, k3):
        """Three cuts not summing to the all-2 vector are rejected."""
        with pytest.raises(PreconditionError):
            four_coloring_from_decomposition(k3, [Cut.empty(3)] * 3)
        with pytest.raises(PreconditionError):
            four_coloring_from_decomposition(k3, [Cut.of({1}, 3), Cut.of({2}, 3)])
