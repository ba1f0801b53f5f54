"""Tests for Hilbert bases and placing triangulations."""

import pytest

from cutpoly.audit.hilbert import (
    HilbertBasisReport,
    hilbert_basis,
    placing_triangulation,
    verify_hilbert_basis,
)
from cutpoly.exceptions import PreconditionError, ResourceLimitError
from cutpoly.lattice.membership import cut_vectors, lattice_description
from cutpoly.limits import use_limits

SQUARE_CONE = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]


class TestPlacingTriangulation:
    """Tests for placing_triangulation."""

    def test_interior_vector_adds_nothing(self):
        """A vector inside the first simplex sees no boundary facet."""
        assert placing_triangulation([(1, 0), (0, 1), (1, 1)]) == [(0, 1)]

    def test_outside_vector_extends(self):
        """A vector outside the current cone is joined to the facets it sees."""
        assert placing_triangulation([(1, 0), (1, 1), (0, 1)]) == [(0, 1), (1, 2)]

    def test_square_cone(self):
        """The cone over a square splits into two simplices."""
        assert len(placing_triangulation(SQUARE_CONE)) == 2

    def test_rank_deficient_rejected(self):
        """Vectors that do not span the space are rejected."""
        with pytest.raises(PreconditionError):
            placing_triangulation([(1, 0), (2, 0)])


class TestHilbertBasis:
    """Tests for hilbert_basis."""

    def test_planar_cone(self):
        """cone((1, 0), (1, 2)) needs the extra element (1, 1)."""
        report = hilbert_basis([(1, 2), (1, 0)])
        assert report.basis == [(1, 0), (1, 1), (1, 2)]
        assert report.offending == [(1, 1)]
        assert not report.is_subset_of_cuts
        assert report.dimension == 2
        assert report.simplices == 1

    def test_square_cone(self):
        """The square cone's basis adds its apex direction."""
        report = hilbert_basis(SQUARE_CONE)
        assert report.offending == [(0, 0, 1)]
        assert sorted(report.basis) == sorted([*SQUARE_CONE, (0, 0, 1)])

    def test_unimodular_cone(self):
        """A unimodular cone is generated by its rays."""
        report = hilbert_basis([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert report.is_subset_of_cuts
        assert report.candidates == 3

    def test_lower_dimensional_cone(self):
        """Cones that are not full-dimensional use the saturated span."""
        report = hilbert_basis([(1, 0, 0), (1, 2, 0)])
        assert report.dimension == 2
        assert report.basis == [(1, 0, 0), (1, 1, 0), (1, 2, 0)]

    def test_triangle_cut_cone(self, k3):
        """In the cut lattice, the K3 cuts form a Hilbert basis."""
        generators = [v for v in cut_vectors(k3) if any(v)]
        report = hilbert_basis(generators, lattice_description(k3))
        assert report.is_subset_of_cuts
        assert report.basis == sorted(generators)

    def test_same_cone_in_full_lattice(self, k3):
        """In Z^3 the K3 cut cone needs (1, 1, 1)."""
        generators = [v for v in cut_vectors(k3) if any(v)]
        report = hilbert_basis(generators)
        assert report.offending == [(1, 1, 1)]

    def test_empty_generators(self):
        """No generators give an empty basis."""
        report = hilbert_basis([])
        assert report.basis == []
        assert report.is_subset_of_cuts

    def test_invalid_generators(self):
        """Zero generators and cones with lines are rejected."""
        with pytest.raises(PreconditionError):
            hilbert_basis([(0, 0), (1, 0)])
        with pytest.raises(PreconditionError):
            hilbert_basis([(1, 0), (-1, 0), (0, 1)])

    def test_generator_outside_lattice(self, k3):
        """Generators must lie in the given lattice."""
        with pytest.raises(PreconditionError):
            hilbert_basis([(1, 0, 0)], lattice_description(k3))

    def test_generator_limit(self):
        """The generator count is bounded."""
        with use_limits(max_hilbert_generators=1), pytest.raises(ResourceLimitError):
            hilbert_basis([(1, 0), (0, 1)])


class TestVerifyHilbertBasis:
    """Tests for verify_hilbert_basis."""

    def test_accepts_correct_basis(self):
        """The computed basis passes the brute-force check."""
        generators = [(1, 0), (1, 2)]
        assert verify_hilbert_basis(hilbert_basis(generators), generators)

    def test_rejects_reducible_element(self):
        """(2, 2) splits as (1, 1) + (1, 1)."""
        report = HilbertBasisReport(
            basis=[(2, 2)],
            is_subset_of_cuts=False,
            offending=[(2, 2)],
            dimension=2,
            simplices=1,
            candidates=1,
        )
        assert not verify_hilbert_basis(report, [(1, 0), (1, 2)])

    def test_accepts_cut_basis_in_lattice(self, c4):
        """Verification respects the lattice description."""
        ld = lattice_description(c4)
        generators = [v for v in cut_vectors(c4) if any(v)]
        assert verify_hilbert_basis(hilbert_basis(generators, ld), generators, ld)

    def test_negative_generators_rejected(self):
        """The box search needs nonnegative generators."""
        with pytest.raises(PreconditionError):
            verify_hilbert_basis(hilbert_basis(SQUARE_CONE), SQUARE_CONE)
