"""Resource limits and the decorator that enforces them."""

import functools
import os
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from typing import Any, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .exceptions import InvalidInputError, ResourceLimitError

F = TypeVar("F", bound=Callable[..., Any])


def _env_int(name: str, default: int) -> Callable[[], int]:
    return lambda: int(os.getenv(name, str(default)))


class Limits(BaseModel):
    """Resource bounds for the exponential searches.

    Every field falls back to a ``CUTPOLY_*`` environment variable, then to the
    built-in default.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    max_cut_vertices: int = Field(default_factory=_env_int("CUTPOLY_MAX_CUT_VERTICES", 20), ge=1)
    max_minor_vertices: int = Field(
        default_factory=_env_int("CUTPOLY_MAX_MINOR_VERTICES", 15), ge=1
    )
    k_max: int = Field(default_factory=_env_int("CUTPOLY_K_MAX", 3), ge=1)
    max_box_points: int = Field(default_factory=_env_int("CUTPOLY_MAX_BOX_POINTS", 2**24), ge=1)
    max_hilbert_dimension: int = Field(
        default_factory=_env_int("CUTPOLY_MAX_HILBERT_DIMENSION", 10), ge=1
    )
    max_hilbert_generators: int = Field(
        default_factory=_env_int("CUTPOLY_MAX_HILBERT_GENERATORS", 16), ge=1
    )
    max_scan_vertices: int = Field(default_factory=_env_int("CUTPOLY_MAX_SCAN_VERTICES", 7), ge=1)
    workers: int = Field(default_factory=_env_int("CUTPOLY_WORKERS", 1), ge=1)


# Global lazy-initialized limits
_limits: Limits | None = None


def get_limits() -> Limits:
    """Get or create the process-wide limits.

    Returns:
        Active Limits instance
    """
    global _limits
    if _limits is None:
        _limits = Limits()
    return _limits


def set_limits(limits: Limits | None) -> None:
    """Replace the process-wide limits (None re-reads the environment on next use)."""
    global _limits
    _limits = limits


@contextmanager
def use_limits(**overrides: int) -> Iterator[Limits]:
    """Temporarily override individual limits.

    Args:
        **overrides: Limits field values to replace

    Yields:
        The overriding Limits instance

    Raises:
        InvalidInputError: If an override is unknown or out of range
    """
    global _limits
    try:
        overriding = Limits.model_validate({**get_limits().model_dump(), **overrides})
    except ValidationError as e:
        raise InvalidInputError(f"Invalid limits {overrides}: {e.errors()[0]['msg']}") from e
    previous = _limits
    _limits = overriding
    try:
        yield _limits
    finally:
        _limits = previous


def _vertex_count(*args: Any, **kwargs: Any) -> int:
    graph = args[0] if args else kwargs["g"]
    return graph.vertex_count


def check_limit(limit_name: str, value: int) -> None:
    """Raise if value exceeds the named bound.

    Raises:
        ResourceLimitError: If value > the configured bound
    """
    bound = getattr(get_limits(), limit_name)
    if value > bound:
        raise ResourceLimitError(
            f"{limit_name} exceeded: {value} > {bound}",
            limit=limit_name,
            value=value,
            bound=bound,
        )


def bounded(
    limit_name: str,
    measure: Callable[..., int] | None = None,
) -> Callable[[F], F]:
    """Decorator that checks a resource bound before the call runs.

    Args:
        limit_name: Name of the Limits field to enforce
        measure: Callable receiving the call's arguments and returning the
            measured size (default: vertex count of the first argument)

    Returns:
        Decorated function that raises ResourceLimitError when over the bound

    Example:
        >>> @bounded("max_cut_vertices")
        ... def count_cuts(g):
        ...     return 2 ** (g.vertex_count - 1)
    """
    measure_fn = measure or _vertex_count

    def decorator(fn: F) -> F:
        @functools.wraps(fn)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            check_limit(limit_name, measure_fn(*args, **kwargs))
            return fn(*args, **kwargs)

        # Mark as bounded for introspection
        wrapper._resource_limit = limit_name  # type: ignore
        return wrapper  # type: ignore

    return decorator
