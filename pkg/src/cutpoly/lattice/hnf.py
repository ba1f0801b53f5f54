"""Row-style Hermite normal form over the integers."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from math import prod

logger = logging.getLogger(__name__)

IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class HnfResult:
    """Hermite normal form H of A with a unimodular transform U, U * A = [H; 0].

    Attributes:
        basis: The nonzero rows of H, in echelon order
        transform: U, one row per row of A
        pivots: Pivot column of each basis row
    """

    basis: IntMatrix
    transform: IntMatrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def left_kernel(self) -> IntMatrix:
        """Integer basis of {y : y * A = 0}: the rows of U past the rank."""
        return self.transform[self.rank :]


def _axpy(rows: list[list[int]], target: int, source: int, factor: int) -> None:
    """rows[target] -= factor * rows[source]."""
    if factor:
        src = rows[source]
        rows[target] = [t - factor * s for t, s in zip(rows[target], src, strict=True)]


def hnf_with_transform(matrix: Sequence[Sequence[int]]) -> HnfResult:
    """Row-style Hermite normal form, tracking the row operations.

    Each column is cleared below the pivot by repeated Euclidean division,
    the pivot is made positive and entries above it are reduced into [0, pivot).

    Args:
        matrix: Integer rows (all of equal length)

    Returns:
        HnfResult with basis, transform and pivot columns
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if a else 0
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for j in range(cols):
        if r == rows:
            break
        while True:
            nonzero = [i for i in range(r, rows) if a[i][j]]
            if not nonzero:
                break
            best = min(nonzero, key=lambda i: (abs(a[i][j]), i))
            if best != r:
                a[r], a[best] = a[best], a[r]
                u[r], u[best] = u[best], u[r]
            if len(nonzero) == 1:
                break
            for i in range(r + 1, rows):
                if a[i][j]:
                    q = a[i][j] // a[r][j]
                    _axpy(a, i, r, q)
                    _axpy(u, i, r, q)
        if not a[r][j]:
            continue
        if a[r][j] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][j] // a[r][j]
            _axpy(a, i, r, q)
            _axpy(u, i, r, q)
        pivots.append(j)
        r += 1

    return HnfResult(
        basis=tuple(tuple(row) for row in a[:r]),
        transform=tuple(tuple(row) for row in u),
        pivots=tuple(pivots),
    )


def hnf(matrix: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form basis of the row lattice of matrix.

    Example:
        >>> hnf([(1, 1, 0), (1, 0, 1), (0, 1, 1)])
        ((1, 0, 1), (0, 1, 1), (0, 0, 2))
    """
    return hnf_with_transform(matrix).basis


def echelon_pivots(basis: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Column of the leading nonzero entry of each row of an echelon basis."""
    return tuple(next(j for j, x in enumerate(row) if x) for row in basis)


def solve_in_lattice(basis: Sequence[Sequence[int]], x: Sequence[int]) -> tuple[int, ...] | None:
    """Integer coefficients c with sum(c[i] * basis[i]) == x, if any.

    Args:
        basis: Rows of a Hermite normal form (echelon, positive pivots)
        x: Target vector

    Returns:
        The coefficients, or None when x is not in the row lattice
    """
    residual = [int(v) for v in x]
    coefficients = []
    for row, pivot in zip(basis, echelon_pivots(basis), strict=True):
        c, remainder = divmod(residual[pivot], row[pivot])
        if remainder:
            return None
        coefficients.append(c)
        if c:
            residual = [t - c * s for t, s in zip(residual, row, strict=True)]
    if any(residual):
        return None
    return tuple(coefficients)


def pivot_product(basis: Sequence[Sequence[int]]) -> int:
    """Product of the pivots; equals [Z^m : L] when the basis has full rank m."""
    return prod(row[pivot] for row, pivot in zip(basis, echelon_pivots(basis), strict=True))
