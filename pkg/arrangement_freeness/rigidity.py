"""matroids of line arrangements and first-order rigidity of their realizations"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from math import comb
from typing import Iterator, Optional, TextIO

from .arrangement import Arrangement, LatticeSummary, concurrent_triples
from .codec.definitions import RigidityVerdict
from .errors import DegenerateInputError, NotARealizationError
from .exactcore import FieldElement
from .linalg import GoodPrime, KernelResult, SparseMatrix, good_primes
from .projgeom import Coordinates, cross, dot

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler

Triple = tuple[int, int, int]


@dataclass
class ArrMatroid:
    """rank 3 matroid given by its ground size and nonbases"""
    n: int
    nonbases: list[Triple] = dataclass_field(default_factory=list)

    def bases(self) -> Iterator[Triple]:
        """all 3-subsets that are not nonbases"""
        excluded: set[Triple] = set(self.nonbases)
        for triple in combinations(range(self.n), 3):
            if triple not in excluded:
                yield triple  # type: ignore[misc]

    @property
    def basis_count(self) -> int:
        """C(n, 3) minus the nonbases"""
        return comb(self.n, 3) - len(self.nonbases)


def matroid_from_lattice(summary: LatticeSummary) -> ArrMatroid:
    """nonbases are the concurrent triples of lines"""
    matroid: ArrMatroid = ArrMatroid(summary.line_count, concurrent_triples(summary))
    expected: int = sum(count * comb(k, 3) for k, count in summary.nk.items())
    if len(matroid.nonbases) != expected:
        raise ArithmeticError(f"{len(matroid.nonbases)} nonbases, n_k predicts {expected}")
    return matroid


@dataclass
class RigidityReport:
    """tangent space of the realization space at the given arrangement"""
    n: int
    jacobian_rows: int
    kernel_dim: int
    modular_ranks: dict[int, int] = dataclass_field(default_factory=dict)
    trivial_rank: int = 0

    @property
    def trivial_dim(self) -> int:
        """column scalings plus the projective linear group"""
        return self.n + 8

    @property
    def verdict(self) -> RigidityVerdict:
        """rigid exactly when only trivial deformations survive"""
        return RigidityVerdict.FIRST_ORDER_RIGID if self.kernel_dim == self.trivial_dim \
            else RigidityVerdict.INCONCLUSIVE

    @property
    def excess(self) -> int:
        """kernel dimension beyond the trivial directions"""
        return self.kernel_dim - self.trivial_dim

    def describe(self) -> str:
        """verdict text"""
        if self.verdict == RigidityVerdict.FIRST_ORDER_RIGID:
            return self.verdict.label
        return f"{self.verdict.label}({self.excess})"

    def to_dict(self) -> dict:
        """serializable form"""
        return {"n": self.n, "jacobian_rows": self.jacobian_rows, "kernel_dim": self.kernel_dim,
                "trivial_dim": self.trivial_dim, "verdict": self.verdict.label, "excess": self.excess,
                "modular_ranks": {str(p): r for p, r in self.modular_ranks.items()}}


def determinant(columns: tuple[Coordinates, Coordinates, Coordinates]) -> FieldElement:
    """det of three columns"""
    return dot(columns[0], cross(columns[1], columns[2]))


def jacobian(arr: Arrangement, matroid: ArrMatroid) -> SparseMatrix:
    """derivatives of the nonbasis minors at the dual coordinates, one row per nonbasis"""
    columns: list[Coordinates] = [line.coords for line in arr.lines]
    matrix: SparseMatrix = SparseMatrix(arr.field, len(matroid.nonbases), 3 * matroid.n)
    for row, (i, j, k) in enumerate(matroid.nonbases):
        if not determinant((columns[i], columns[j], columns[k])).is_zero():
            raise NotARealizationError((i, j, k))
        # d det(a, b, c) / da = b x c and cyclically
        for index, gradient in ((i, cross(columns[j], columns[k])), (j, cross(columns[k], columns[i])),
                                (k, cross(columns[i], columns[j]))):
            for coordinate in range(3):
                matrix.set(row, 3 * index + coordinate, gradient[coordinate])
    return matrix


def trivial_directions(arr: Arrangement) -> list[list[FieldElement]]:
    """column scalings and the action of gl3 as tangent vectors"""
    n: int = len(arr.lines)
    zero: FieldElement = arr.field.zero
    directions: list[list[FieldElement]] = []
    for index, line in enumerate(arr.lines):
        vector: list[FieldElement] = [zero] * (3 * n)
        vector[3 * index:3 * index + 3] = line.coords
        directions.append(vector)
    for target in range(3):
        for source in range(3):
            vector = [zero] * (3 * n)
            for index, line in enumerate(arr.lines):
                vector[3 * index + target] = line.coords[source]
            directions.append(vector)
    return directions


def rigidity_check(arr: Arrangement, matroid: ArrMatroid) -> RigidityReport:
    """exact kernel of the Jacobian compared with the trivial deformations"""
    if matroid.n != len(arr.lines):
        raise DegenerateInputError(what=f"matroid on {matroid.n} elements",
                                   reason=f"arrangement has {len(arr.lines)} lines")
    primes: tuple[GoodPrime, ...] = good_primes(arr.field)
    matrix: SparseMatrix = jacobian(arr, matroid)
    kernel: KernelResult = matrix.exact_kernel(primes)
    report: RigidityReport = RigidityReport(n=matroid.n, jacobian_rows=len(matroid.nonbases), kernel_dim=kernel.dimension)
    for prime in primes[:2]:
        report.modular_ranks[prime.prime] = matrix.rank_mod(prime)
    exact_rank: int = matrix.ncols - kernel.dimension
    if any(rank != exact_rank for rank in report.modular_ranks.values()):
        LOGGER.warning(f"{arr}: modular ranks {report.modular_ranks} differ from exact rank {exact_rank}")
    directions: list[list[FieldElement]] = trivial_directions(arr)
    if not all(matrix.annihilates(direction) for direction in directions):
        raise ArithmeticError(f"{arr}: a trivial deformation is not tangent to the realization space")
    span: SparseMatrix = SparseMatrix(arr.field, 3 * matroid.n, len(directions))
    for column, direction in enumerate(directions):
        for row, value in enumerate(direction):
            span.set(row, column, value)
    report.trivial_rank = len(directions) - span.exact_kernel(primes).dimension
    if report.trivial_rank != report.trivial_dim:
        raise ArithmeticError(f"{arr}: trivial deformations span rank {report.trivial_rank}, "
                              f"expected n + 8 = {report.trivial_dim}")
    LOGGER.info(f"{arr}: Jacobian {report.jacobian_rows}x{3 * matroid.n}, kernel {report.kernel_dim}, "
                f"trivial {report.trivial_dim}, {report.describe()}")
    return report


def _variable(row: int, column: int) -> str:
    """name of the entry x_{row,column} of the generic 3 x n matrix"""
    return f"x{row}_{column + 1}"


def determinant_text(triple: Triple) -> str:
    """cofactor expansion of the generic 3 x 3 minor"""
    i, j, k = triple
    terms: list[str] = []
    for (r0, r1, r2), sign in (((0, 1, 2), '+'), ((0, 2, 1), '-'), ((1, 0, 2), '-'),
                               ((1, 2, 0), '+'), ((2, 0, 1), '+'), ((2, 1, 0), '-')):
        terms.append(f"{sign}{_variable(r0, i)}*{_variable(r1, j)}*{_variable(r2, k)}")
    return ''.join(terms).lstrip('+')


def emit_ideal(matroid: ArrMatroid, stream: TextIO, basis_limit: Optional[int] = None) -> int:
    """write the generators of the realization ideal, one per line, returns the count"""
    count: int = 0
    for triple in matroid.nonbases:
        stream.write(determinant_text(triple) + '\n')
        count += 1
    bases: list[Triple] = list(matroid.bases())
    if basis_limit is not None:
        bases = bases[:basis_limit]
    factors: str = '*'.join(f"({determinant_text(b)})" for b in bases)
    stream.write(f"1-d*{factors}\n" if factors else "1-d\n")
    LOGGER.debug(f"emitted {count} nonbasis minors and a saturation generator over {len(bases)} bases")
    return count + 1
