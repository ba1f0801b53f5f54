"""Hilbert bases of cones of lattice points via placing triangulations."""

import logging
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations, product
from math import lcm

from pydantic import BaseModel
from sympy import Matrix

from ..exceptions import PreconditionError
from ..graph.multigraph import EdgeVector
from ..lattice.hnf import hnf, hnf_with_transform, solve_in_lattice
from ..lattice.membership import LatticeDescription, in_hnf_lattice
from ..lattice.simplex import lp_member_cone, lp_member_convex
from ..limits import check_limit

logger = logging.getLogger(__name__)

Simplex = tuple[int, ...]


class HilbertBasisReport(BaseModel):
    """Minimal generating set of the monoid cone(generators) ∩ L.

    Attributes:
        basis: The Hilbert basis, sorted
        is_subset_of_cuts: Whether every basis element is one of the generators
        offending: Basis elements that are not generators, sorted
        dimension: Dimension of the cone
        simplices: Size of the triangulation used
        candidates: Number of candidates examined before reduction
    """

    basis: list[tuple[int, ...]]
    is_subset_of_cuts: bool
    offending: list[tuple[int, ...]]
    dimension: int
    simplices: int
    candidates: int


@dataclass(frozen=True)
class _SimplicialCone:
    rows: tuple[tuple[int, ...], ...]
    adjugate: tuple[tuple[int, ...], ...]
    det: int

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "_SimplicialCone":
        m = Matrix(rows)
        adj = m.adjugate()
        return cls(
            tuple(tuple(int(x) for x in row) for row in rows),
            tuple(tuple(int(adj[i, j]) for j in range(adj.cols)) for i in range(adj.rows)),
            int(m.det(method="bareiss")),
        )

    def scaled_coefficients(self, y: Sequence[int]) -> list[int]:
        """det * (y * rows^-1), kept integral."""
        d = len(self.rows)
        return [sum(y[i] * self.adjugate[i][j] for i in range(d)) for j in range(d)]

    def contains(self, y: Sequence[int]) -> bool:
        coefficients = self.scaled_coefficients(y)
        if self.det > 0:
            return all(c >= 0 for c in coefficients)
        return all(c <= 0 for c in coefficients)

    def parallelepiped_points(self) -> list[tuple[int, ...]]:
        """Nonzero integer points sum(t_i * rows[i]) with 0 <= t_i < 1."""
        d = len(self.rows)
        size = abs(self.det)
        diagonal = [row[j] for j, row in enumerate(hnf(self.rows))]
        sign = 1 if self.det > 0 else -1
        points = []
        for y in product(*(range(h) for h in diagonal)):
            numerators = [(sign * c) % size for c in self.scaled_coefficients(y)]
            if not any(numerators):
                continue
            point = []
            for j in range(d):
                total = sum(numerators[i] * self.rows[i][j] for i in range(d))
                assert total % size == 0
                point.append(total // size)
            points.append(tuple(point))
        return points


def _det(rows: Sequence[Sequence[int]]) -> int:
    return int(Matrix(rows).det(method="bareiss"))


def _rank(rows: Sequence[Sequence[int]]) -> int:
    return Matrix(rows).rank() if rows else 0


def placing_triangulation(vectors: Sequence[Sequence[int]]) -> list[Simplex]:
    """Placing triangulation of the cone spanned by full-rank vectors.

    The first simplex is the greedy basis in input order; each remaining
    vector is then joined to every boundary facet it sees, in input order.
    A facet F of simplex s, opposite vertex w, is seen from v when v and w lie
    strictly on opposite sides of span(F).

    Args:
        vectors: Generators of a pointed cone whose rank equals their length

    Returns:
        Simplices as sorted index tuples into vectors

    Raises:
        PreconditionError: If the vectors do not span the whole space
    """
    d = len(vectors[0]) if vectors else 0
    initial: list[int] = []
    for index in range(len(vectors)):
        if _rank([vectors[i] for i in [*initial, index]]) == len(initial) + 1:
            initial.append(index)
        if len(initial) == d:
            break
    if len(initial) != d:
        raise PreconditionError(f"Vectors span rank {len(initial)} < dimension {d}")

    simplices: list[Simplex] = [tuple(initial)]
    for v in range(len(vectors)):
        if v in initial:
            continue
        facets = Counter(
            facet for simplex in simplices for facet in combinations(simplex, d - 1)
        )
        added = []
        for simplex in simplices:
            for facet in combinations(simplex, d - 1):
                if facets[facet] != 1:
                    continue
                (w,) = set(simplex) - set(facet)
                base = [vectors[i] for i in facet]
                if _det([*base, vectors[v]]) * _det([*base, vectors[w]]) < 0:
                    added.append(tuple(sorted((*facet, v))))
        simplices.extend(added)
    logger.debug(f"Placing triangulation of {len(vectors)} vectors: {len(simplices)} simplices")
    return simplices


def _integer_rows(vectors: Sequence[Matrix]) -> list[tuple[int, ...]]:
    rows = []
    for vector in vectors:
        scale = lcm(*(int(x.q) for x in vector))
        rows.append(tuple(int(x * scale) for x in vector))
    return rows


def _saturated_span_basis(rows: Sequence[Sequence[int]], r: int) -> tuple[tuple[int, ...], ...]:
    """Integer basis (in HNF) of Z^r ∩ span(rows)."""
    normals = _integer_rows(Matrix(rows).nullspace())
    columns = [tuple(normal[i] for normal in normals) for i in range(r)]
    return hnf(hnf_with_transform(columns).left_kernel())


def _to_coordinates(
    basis: Sequence[Sequence[int]], vectors: Sequence[Sequence[int]]
) -> list[tuple[int, ...]]:
    coordinates = []
    for vector in vectors:
        c = solve_in_lattice(basis, vector)
        if c is None:
            raise PreconditionError(f"Generator {list(vector)} is not in the lattice")
        coordinates.append(c)
    return coordinates


def _from_coordinates(basis: Sequence[Sequence[int]], c: Sequence[int], m: int) -> tuple[int, ...]:
    return tuple(sum(c[i] * basis[i][j] for i in range(len(basis))) for j in range(m))


def hilbert_basis(
    generators: Sequence[Sequence[int]], ld: LatticeDescription | None = None
) -> HilbertBasisReport:
    """Hilbert basis of cone(generators) ∩ L, with L = Z^m when ld is None.

    Generators are rewritten in coordinates of L, then of the saturated
    sublattice of their span, so the cone is full-dimensional. Candidates are
    the generators plus the nonzero lattice points of every half-open
    fundamental parallelepiped of a placing triangulation; a candidate x is
    dropped when x - y lies in the cone for some other candidate y.

    Args:
        generators: Nonzero integer vectors spanning a pointed cone
        ld: Lattice description of L, or None for the full integer lattice

    Returns:
        HilbertBasisReport in the original coordinates

    Raises:
        PreconditionError: If the cone is not pointed or a generator is outside L
        ResourceLimitError: If the dimension or generator count exceeds its bound
    """
    gens = sorted({tuple(int(x) for x in g) for g in generators})
    if any(not any(g) for g in gens):
        raise PreconditionError("Generators must be nonzero")
    check_limit("max_hilbert_generators", len(gens))
    if not gens:
        return HilbertBasisReport(
            basis=[], is_subset_of_cuts=True, offending=[], dimension=0, simplices=0, candidates=0
        )
    m = len(gens[0])
    if lp_member_convex(gens, [0] * m):
        raise PreconditionError("Cone contains a line")

    lattice_basis = ld.hnf_basis if ld is not None else tuple(
        tuple(1 if i == j else 0 for j in range(m)) for i in range(m)
    )
    coordinates = _to_coordinates(lattice_basis, gens)
    r = len(lattice_basis)
    d = _rank(coordinates)
    check_limit("max_hilbert_dimension", d)
    if d < r:
        span_basis = _saturated_span_basis(coordinates, r)
        coordinates = _to_coordinates(span_basis, coordinates)
    else:
        span_basis = tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))

    simplices = placing_triangulation(coordinates)
    cones = [_SimplicialCone.of([coordinates[i] for i in simplex]) for simplex in simplices]
    logger.info(
        f"Hilbert basis: {len(gens)} generators in dimension {d}, {len(cones)} simplicial cones, "
        f"total multiplicity {sum(abs(c.det) for c in cones)}"
    )

    candidates = set(coordinates)
    for cone in cones:
        candidates.update(cone.parallelepiped_points())
    ordered = sorted(candidates)

    def original(c: Sequence[int]) -> tuple[int, ...]:
        return _from_coordinates(lattice_basis, _from_coordinates(span_basis, c, r), m)

    originals = {c: original(c) for c in ordered}
    nonnegative = all(x >= 0 for g in gens for x in g)

    def reducible(x: tuple[int, ...]) -> bool:
        for y in ordered:
            if y == x:
                continue
            if nonnegative and any(a < b for a, b in zip(originals[x], originals[y], strict=True)):
                continue
            difference = tuple(a - b for a, b in zip(x, y, strict=True))
            if any(cone.contains(difference) for cone in cones):
                return True
        return False

    basis = sorted(originals[c] for c in ordered if not reducible(c))
    generator_set = set(gens)
    offending = [b for b in basis if b not in generator_set]
    return HilbertBasisReport(
        basis=basis,
        is_subset_of_cuts=not offending,
        offending=offending,
        dimension=d,
        simplices=len(cones),
        candidates=len(ordered),
    )


def verify_hilbert_basis(
    report: HilbertBasisReport,
    generators: Sequence[Sequence[int]],
    ld: LatticeDescription | None = None,
) -> bool:
    """Re-check a reported basis by brute force, independent of the triangulation.

    Each element must lie in the cone (exact LP) and in L, and must not split
    as y + (x - y) with both parts nonzero cone lattice points; the split
    search covers the box [0, x], so generators must be nonnegative.

    Raises:
        PreconditionError: If some generator has a negative entry
    """
    gens = [tuple(int(x) for x in g) for g in generators]
    if any(x < 0 for g in gens for x in g):
        raise PreconditionError("Brute-force verification needs nonnegative generators")

    def in_monoid(x: EdgeVector) -> bool:
        if ld is not None and not in_hnf_lattice(ld, x):
            return False
        return bool(lp_member_cone(gens, x))

    for element in report.basis:
        if not any(element) or not in_monoid(element):
            return False
        for y in product(*(range(x + 1) for x in element)):
            if not any(y) or y == element:
                continue
            rest = tuple(a - b for a, b in zip(element, y, strict=True))
            if in_monoid(y) and in_monoid(rest):
                logger.warning(f"Basis element {list(element)} splits as {list(y)} + {list(rest)}")
                return False
    return True
