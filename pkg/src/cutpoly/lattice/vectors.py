"""Integer edge vectors and dilated points."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from ..exceptions import DimensionMismatchError, PreconditionError
from ..graph.multigraph import EdgeVector


@dataclass(frozen=True)
class DilatedPoint:
    """An edge vector together with the dilation level k it is read at."""

    vector: EdgeVector
    level: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise PreconditionError(f"Dilation level must be >= 1, got {self.level}")

    def scaled(self, factor: int) -> "DilatedPoint":
        """The point factor * x at level factor * k."""
        return DilatedPoint(scale(self.vector, factor), self.level * factor)


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"Vector lengths differ: {len(a)} != {len(b)}")


def add(a: Sequence[int], b: Sequence[int]) -> EdgeVector:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b, strict=True))


def subtract(a: Sequence[int], b: Sequence[int]) -> EdgeVector:
    _check_lengths(a, b)
    return tuple(x - y for x, y in zip(a, b, strict=True))


def scale(a: Sequence[int], factor: int) -> EdgeVector:
    return tuple(factor * x for x in a)


def vector_sum(vectors: Iterable[Sequence[int]], length: int) -> EdgeVector:
    """Component-wise sum; the zero vector of the given length when empty."""
    total = [0] * length
    for vector in vectors:
        _check_lengths(total, vector)
        for i, x in enumerate(vector):
            total[i] += x
    return tuple(total)


def support(a: Sequence[int]) -> frozenset[int]:
    """Indices of nonzero entries."""
    return frozenset(i for i, x in enumerate(a) if x)


def check_dimension(vector: Sequence[int], edge_count: int) -> None:
    """Raise DimensionMismatchError unless the vector has one entry per edge."""
    if len(vector) != edge_count:
        raise DimensionMismatchError(
            f"Point has {len(vector)} entries but the graph has {edge_count} edges"
        )
