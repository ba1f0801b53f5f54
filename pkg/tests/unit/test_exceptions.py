"""Tests for exception classes."""

import pytest

from cutpoly.exceptions import (
    CutpolyError,
    DimensionMismatchError,
    GraphFormatError,
    InternalContradictionError,
    InvalidInputError,
    NotInDilationError,
    NotPlanarError,
    PreconditionError,
    ResourceLimitError,
    WorkerError,
)


class TestCutpolyError:
    """Tests for CutpolyError base exception."""

    def test_is_exception(self):
        """CutpolyError should be an Exception."""
        assert issubclass(CutpolyError, Exception)

    def test_can_be_raised(self):
        """CutpolyError should be raisable."""
        with pytest.raises(CutpolyError) as exc_info:
            raise CutpolyError("test error")
        assert str(exc_info.value) == "test error"


class TestInvalidInputError:
    """Tests for the user-error branch of the hierarchy."""

    @pytest.mark.parametrize(
        "cls",
        [
            GraphFormatError,
            DimensionMismatchError,
            NotPlanarError,
            NotInDilationError,
            PreconditionError,
        ],
    )
    def test_subclasses_are_invalid_input(self, cls):
        """Every input error should be caught as InvalidInputError."""
        assert issubclass(cls, InvalidInputError)
        assert issubclass(cls, CutpolyError)

    def test_not_in_dilation_carries_reason_and_level(self):
        """NotInDilationError should keep the failed condition and k."""
        error = NotInDilationError("bad point", reason="not in lattice", k=3)
        assert str(error) == "bad point"
        assert error.reason == "not in lattice"
        assert error.k == 3

    def test_not_in_dilation_defaults(self):
        """NotInDilationError attributes should default to None."""
        error = NotInDilationError("bad point")
        assert error.reason is None
        assert error.k is None


class TestResourceLimitError:
    """Tests for ResourceLimitError."""

    def test_is_not_invalid_input(self):
        """Resource limits are a separate branch from input errors."""
        assert issubclass(ResourceLimitError, CutpolyError)
        assert not issubclass(ResourceLimitError, InvalidInputError)

    def test_carries_limit_details(self):
        """ResourceLimitError should store limit, value and bound."""
        error = ResourceLimitError("too big", limit="max_cut_vertices", value=25, bound=20)
        assert error.limit == "max_cut_vertices"
        assert error.value == 25
        assert error.bound == 20


class TestInternalContradictionError:
    """Tests for InternalContradictionError."""

    def test_is_not_invalid_input(self):
        """Contradictions are bugs, not user errors."""
        assert issubclass(InternalContradictionError, CutpolyError)
        assert not issubclass(InternalContradictionError, InvalidInputError)


class TestWorkerError:
    """Tests for WorkerError."""

    def test_inherits_from_cutpoly_error(self):
        """WorkerError should inherit from CutpolyError."""
        assert issubclass(WorkerError, CutpolyError)

    def test_can_store_error_details(self):
        """WorkerError should store error_type and traceback."""
        error = WorkerError(
            "Worker failed",
            error_type="ValueError",
            traceback_str="Traceback...",
        )
        assert str(error) == "Worker failed"
        assert error.error_type == "ValueError"
        assert error.traceback_str == "Traceback..."
