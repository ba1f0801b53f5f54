"""Exact phase-one simplex over the rationals, with Bland's anti-cycling rule."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LpResult:
    """Outcome of a feasibility problem.

    Attributes:
        feasible: Whether some nonnegative weights satisfy the constraints
        weights: A feasible basic solution, one weight per generator
        pivots: Number of simplex pivots performed
    """

    feasible: bool
    weights: tuple[Fraction, ...] | None
    pivots: int

    def __bool__(self) -> bool:
        return self.feasible


class SimplexTableau:
    """Full tableau for {A y = b, y >= 0} with one artificial variable per row.

    Columns 0..n-1 are the structural variables and n..n+m-1 the artificials,
    which start basic and never re-enter once they leave.
    """

    def __init__(self, a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> None:
        self.m = len(a)
        self.n = len(a[0]) if a else 0
        self.rows: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        for i, (row, value) in enumerate(zip(a, b, strict=True)):
            sign = -1 if value < 0 else 1
            artificial = [Fraction(1 if k == i else 0) for k in range(self.m)]
            self.rows.append([sign * Fraction(x) for x in row] + artificial)
            self.rhs.append(sign * Fraction(value))
        self.basis = [self.n + i for i in range(self.m)]
        # Reduced costs of max -sum(artificials), in terms of the nonbasic columns
        self.costs = [sum((r[j] for r in self.rows), Fraction(0)) for j in range(self.n)]
        self.costs += [Fraction(0)] * self.m
        self.infeasibility = sum(self.rhs, Fraction(0))
        self.pivots = 0

    def pivot(self, i: int, j: int) -> None:
        logger.debug(f"Pivot {self.basis[i]} -> {j} ({i},{j})")
        row = self.rows[i]
        piv = row[j]
        row[:] = [x / piv for x in row]
        self.rhs[i] /= piv
        for k in range(self.m):
            if k != i and self.rows[k][j]:
                f = self.rows[k][j]
                self.rows[k] = [x - f * y for x, y in zip(self.rows[k], row, strict=True)]
                self.rhs[k] -= f * self.rhs[i]
        delta = self.costs[j]
        self.costs = [c - delta * y for c, y in zip(self.costs, row, strict=True)]
        self.infeasibility -= delta * self.rhs[i]
        self.basis[i] = j
        self.pivots += 1

    def bland_step(self) -> str:
        """One pivot under Bland's rule: least entering index, then least leaving variable.

        Returns:
            "optimal" when no structural column improves, else "go_on"
        """
        entering = next((j for j in range(self.n) if self.costs[j] > 0), None)
        if entering is None:
            return "optimal"
        candidates = [
            (self.rhs[i] / self.rows[i][entering], self.basis[i], i)
            for i in range(self.m)
            if self.rows[i][entering] > 0
        ]
        # Phase one is bounded below by zero, so some row always limits the step
        _, _, leaving = min(candidates)
        self.pivot(leaving, entering)
        return "go_on"

    def solve(self) -> LpResult:
        """Run phase one to optimality.

        Returns:
            LpResult; feasible iff the artificial sum reaches zero
        """
        bound = comb(self.n + self.m, self.m)
        while self.bland_step() != "optimal":
            assert self.pivots <= bound, f"Simplex exceeded {bound} pivots"
        if self.infeasibility != 0:
            return LpResult(False, None, self.pivots)
        weights = [Fraction(0)] * self.n
        for i, var in enumerate(self.basis):
            if var < self.n:
                weights[var] = self.rhs[i]
        return LpResult(True, tuple(weights), self.pivots)


def _feasible(a: list[list[Fraction]], b: list[Fraction]) -> LpResult:
    kept_a: list[list[Fraction]] = []
    kept_b: list[Fraction] = []
    for row, value in zip(a, b, strict=True):
        if any(row):
            kept_a.append(row)
            kept_b.append(value)
        elif value:
            return LpResult(False, None, 0)
    n = len(a[0]) if a else 0
    if not kept_a:
        return LpResult(True, tuple(Fraction(0) for _ in range(n)), 0)
    return SimplexTableau(kept_a, kept_b).solve()


def _columns(
    generators: Sequence[Sequence[int]], target: Sequence[Fraction]
) -> list[list[Fraction]]:
    return [[Fraction(g[i]) for g in generators] for i in range(len(target))]


def lp_member_convex(
    generators: Sequence[Sequence[int]], target: Sequence[Fraction | int]
) -> LpResult:
    """Decide target in conv(generators) exactly.

    Args:
        generators: Nonempty list of integer vectors
        target: Rational point of the same length

    Returns:
        LpResult whose weights are convex coefficients when feasible
    """
    if not generators:
        raise PreconditionError("lp_member_convex needs at least one generator")
    goal = [Fraction(x) for x in target]
    a = _columns(generators, goal)
    a.append([Fraction(1)] * len(generators))
    return _feasible(a, goal + [Fraction(1)])


def lp_member_cone(
    generators: Sequence[Sequence[int]], target: Sequence[Fraction | int]
) -> LpResult:
    """Decide target in the cone spanned by generators exactly."""
    goal = [Fraction(x) for x in target]
    if not generators:
        return LpResult(not any(goal), () if not any(goal) else None, 0)
    return _feasible(_columns(generators, goal), goal)
