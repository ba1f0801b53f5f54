"""Tests for the small-graph conjecture scan."""

import pytest

from cutpoly.exceptions import ResourceLimitError
from cutpoly.limits import use_limits
from cutpoly.scan import atlas_indices, conjecture_scan


class TestAtlasIndices:
    """Tests for atlas_indices."""

    def test_connected_graph_counts(self):
        """There are 1, 1, 2 and 6 connected graphs on 1 to 4 vertices."""
        assert len(atlas_indices(1)) == 1
        assert len(atlas_indices(3)) == 4
        assert len(atlas_indices(4)) == 10


class TestConjectureScan:
    """Tests for conjecture_scan."""

    def test_small_graphs_have_no_gaps(self):
        """Graphs on at most 4 vertices are normal up to level 2."""
        report = conjecture_scan(4, 2)
        assert report.scanned == 10
        assert report.gap_graphs == []
        assert report.counterexamples == []
        rows = {(row.has_k5_minor, row.gap_found): row.graphs for row in report.table}
        assert rows == {(False, False): 10, (False, True): 0, (True, False): 0, (True, True): 0}

    def test_planar_only(self):
        """Every graph on 4 vertices is planar."""
        assert conjecture_scan(4, 1, planar_only=True).scanned == 10

    def test_sampling_is_seeded(self):
        """The same seed scans the same graphs."""
        first = conjecture_scan(4, 1, sample=3, seed=7)
        second = conjecture_scan(4, 1, sample=3, seed=7)
        assert first.scanned == 3
        assert first == second

    def test_atlas_bound(self):
        """The atlas stops at seven vertices."""
        with pytest.raises(ResourceLimitError) as exc_info:
            conjecture_scan(8, 1)
        assert exc_info.value.limit == "max_scan_vertices"

    def test_configured_bound(self):
        """max_scan_vertices caps max_n."""
        with use_limits(max_scan_vertices=3), pytest.raises(ResourceLimitError):
            conjecture_scan(4, 1)

    def test_oversized_graphs_are_skipped(self):
        """Graphs whose boxes exceed the bound are listed, not fatal."""
        with use_limits(max_box_points=8):
            report = conjecture_scan(3, 2)
        assert report.scanned == 2
        assert len(report.skipped) == 2
