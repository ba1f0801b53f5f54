"""Exception classes for cutpoly."""


class CutpolyError(Exception):
    """Base exception for cutpoly errors."""

    pass


class InvalidInputError(CutpolyError):
    """Input rejected before any computation started."""

    pass


class GraphFormatError(InvalidInputError):
    """Graph or point file could not be parsed, or describes a looped graph."""

    pass


class DimensionMismatchError(InvalidInputError):
    """Point length does not match the edge count of the graph."""

    pass


class NotPlanarError(InvalidInputError):
    """A planar-only operation was given a nonplanar graph."""

    pass


class NotInDilationError(InvalidInputError):
    """A point is not a lattice point of the requested dilation."""

    def __init__(self, message: str, reason: str | None = None, k: int | None = None) -> None:
        """Initialize the error.

        Args:
            message: Error message
            reason: One of "not in lattice", "not in polytope" or "out of range"
            k: Dilation level that was checked
        """
        super().__init__(message)
        self.reason = reason
        self.k = k


class PreconditionError(InvalidInputError):
    """Operation precondition violated by the caller."""

    pass


class ResourceLimitError(CutpolyError):
    """A configured resource bound was exceeded."""

    def __init__(
        self,
        message: str,
        limit: str | None = None,
        value: int | None = None,
        bound: int | None = None,
    ) -> None:
        """Initialize the error.

        Args:
            message: Error message
            limit: Name of the limit in Limits
            value: Measured value
            bound: Configured bound
        """
        super().__init__(message)
        self.limit = limit
        self.value = value
        self.bound = bound


class InternalContradictionError(CutpolyError):
    """A branch that the mathematics rules out was reached."""

    pass


class WorkerError(CutpolyError):
    """A parallel worker raised while running a task."""

    def __init__(
        self,
        message: str,
        error_type: str | None = None,
        traceback_str: str | None = None,
    ) -> None:
        """Initialize the error.

        Args:
            message: Error message
            error_type: Type of the original error
            traceback_str: Traceback from the worker
        """
        super().__init__(message)
        self.error_type = error_type
        self.traceback_str = traceback_str
