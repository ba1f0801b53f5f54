"""Tests for cut space and cycle space utilities."""

import pytest

from cutpoly.exceptions import PreconditionError
from cutpoly.graph.cycles import (
    cycle_basis,
    euler_cycle_decomposition,
    is_bipartite,
    is_even_subgraph,
    recover_cut_from_edgeset,
)
from cutpoly.graph.multigraph import Cut, Multigraph, crossing_set, enumerate_cuts


class TestRecoverCut:
    """Tests for recover_cut_from_edgeset."""

    def test_recovers_triangle_cut(self, k3):
        """Two edges of a triangle form the cut around their shared vertex."""
        assert recover_cut_from_edgeset(k3, [0, 1]) == Cut.of({1, 2}, 3)

    def test_odd_set_on_cycle_is_not_a_cut(self, k3):
        """A single triangle edge meets the triangle an odd number of times."""
        assert recover_cut_from_edgeset(k3, [0]) is None

    def test_every_crossing_set_recovers(self, k4):
        """Every cut should be recovered from its own crossing set."""
        for c in enumerate_cuts(k4):
            assert recover_cut_from_edgeset(k4, crossing_set(k4, c)) == c

    def test_empty_set_gives_empty_cut(self, petersen):
        """The empty edge set is the crossing set of the empty cut."""
        assert recover_cut_from_edgeset(petersen, []) == Cut.empty(10)


class TestBipartite:
    """Tests for is_bipartite."""

    def test_even_cycle(self, c4):
        """C4 should yield its bipartition."""
        assert is_bipartite(c4) == Cut.of({1, 3}, 4)

    def test_odd_cycle(self, c5, k3):
        """Odd cycles are not bipartite."""
        assert is_bipartite(c5) is None
        assert is_bipartite(k3) is None

    def test_edgeless(self):
        """Edgeless graphs yield the empty cut."""
        assert is_bipartite(Multigraph.from_pairs(3, [])) == Cut.empty(3)


class TestEvenSubgraph:
    """Tests for is_even_subgraph and euler_cycle_decomposition."""

    def test_triangle_is_even(self, k3):
        """All edges of a triangle form an even subgraph."""
        assert is_even_subgraph(k3, [0, 1, 2])
        assert not is_even_subgraph(k3, [0, 1])

    def test_digon_is_even(self, digon):
        """Two parallel edges form a circuit."""
        assert is_even_subgraph(digon, [0, 1])

    def test_bowtie_splits_into_two_triangles(self, bowtie):
        """The bowtie should split at the shared vertex."""
        assert euler_cycle_decomposition(bowtie, range(6)) == [(0, 1, 2), (3, 4, 5)]

    def test_circuits_partition_the_set(self, k4):
        """Circuits of a 4-cycle should cover it; all of K4 has odd degrees."""
        four_cycle = [0, 1, 4, 5]
        circuits = euler_cycle_decomposition(k4, four_cycle)
        covered = [e for circuit in circuits for e in circuit]
        assert sorted(covered) == sorted(four_cycle)
        assert all(is_even_subgraph(k4, c) for c in circuits)
        with pytest.raises(PreconditionError):
            euler_cycle_decomposition(k4, range(6))

    def test_empty_set(self, k3):
        """The empty edge set has no circuits."""
        assert euler_cycle_decomposition(k3, []) == []


class TestCycleBasis:
    """Tests for cycle_basis."""

    def test_size(self, k4, petersen):
        """There should be m - n + c fundamental cycles."""
        assert len(cycle_basis(k4)) == 3
        assert len(cycle_basis(petersen)) == 15 - 10 + 1

    def test_cycles_are_even(self, grid):
        """Each fundamental cycle should be an even subgraph."""
        for cycle in cycle_basis(grid):
            assert is_even_subgraph(grid, cycle)

    def test_tree_has_none(self, path3):
        """Forests have an empty cycle basis."""
        assert cycle_basis(path3) == []
