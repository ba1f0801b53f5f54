"""Tests for resource limits and the bounded decorator."""

import pytest

from cutpoly.exceptions import InvalidInputError, ResourceLimitError
from cutpoly.graph.multigraph import enumerate_cuts
from cutpoly.limits import Limits, bounded, check_limit, get_limits, set_limits, use_limits


class TestLimits:
    """Tests for the Limits model."""

    def test_defaults(self, monkeypatch):
        """Should use the built-in defaults without environment overrides."""
        for name in ["CUTPOLY_MAX_CUT_VERTICES", "CUTPOLY_K_MAX", "CUTPOLY_MAX_MINOR_VERTICES"]:
            monkeypatch.delenv(name, raising=False)
        limits = Limits()
        assert limits.max_cut_vertices == 20
        assert limits.max_minor_vertices == 15
        assert limits.k_max == 3

    def test_environment_override(self, monkeypatch):
        """Should read CUTPOLY_* environment variables."""
        monkeypatch.setenv("CUTPOLY_MAX_CUT_VERTICES", "7")
        monkeypatch.setenv("CUTPOLY_WORKERS", "4")
        limits = Limits()
        assert limits.max_cut_vertices == 7
        assert limits.workers == 4

    def test_frozen(self):
        """Limits should be immutable."""
        limits = Limits()
        with pytest.raises(Exception):  # noqa: B017
            limits.k_max = 9


class TestGlobalLimits:
    """Tests for the lazily created process-wide limits."""

    def test_creates_limits_lazily(self):
        """Should create limits on first call and reuse them."""
        set_limits(None)
        first = get_limits()
        assert get_limits() is first

    def test_set_limits_replaces_instance(self):
        """set_limits should install the given instance."""
        custom = Limits(k_max=5)
        set_limits(custom)
        assert get_limits() is custom

    def test_use_limits_restores_previous(self):
        """use_limits should override inside the block only."""
        before = get_limits()
        with use_limits(k_max=7) as inner:
            assert inner.k_max == 7
            assert get_limits().k_max == 7
        assert get_limits() is before

    def test_use_limits_validates_overrides(self):
        """Out-of-range and unknown overrides raise InvalidInputError."""
        before = get_limits()
        with pytest.raises(InvalidInputError), use_limits(workers=0):
            pass
        with pytest.raises(InvalidInputError), use_limits(k_max=-1):
            pass
        with pytest.raises(InvalidInputError), use_limits(max_widgets=3):
            pass
        assert get_limits() is before


class TestCheckLimit:
    """Tests for check_limit."""

    def test_within_bound_passes(self):
        """Values at the bound should be accepted."""
        with use_limits(max_box_points=10):
            check_limit("max_box_points", 10)

    def test_over_bound_raises(self):
        """Values above the bound should raise with details."""
        with use_limits(max_box_points=10), pytest.raises(ResourceLimitError) as exc_info:
            check_limit("max_box_points", 11)
        assert exc_info.value.limit == "max_box_points"
        assert exc_info.value.value == 11
        assert exc_info.value.bound == 10


class TestBounded:
    """Tests for the bounded decorator."""

    def test_preserves_function_metadata(self):
        """Should preserve function name and docstring."""

        @bounded("max_cut_vertices")
        def my_function(g):
            """My docstring."""
            return g

        assert my_function.__name__ == "my_function"
        assert my_function.__doc__ == "My docstring."
        assert my_function._resource_limit == "max_cut_vertices"

    def test_custom_measure(self):
        """Should measure with the supplied callable."""

        @bounded("max_box_points", measure=lambda n: n)
        def identity(n):
            return n

        with use_limits(max_box_points=5):
            assert identity(5) == 5
            with pytest.raises(ResourceLimitError):
                identity(6)

    def test_vertex_bound_on_library_function(self, k4):
        """enumerate_cuts should refuse graphs above max_cut_vertices."""
        with use_limits(max_cut_vertices=3), pytest.raises(ResourceLimitError) as exc_info:
            enumerate_cuts(k4)
        assert exc_info.value.limit == "max_cut_vertices"
        assert exc_info.value.value == 4
