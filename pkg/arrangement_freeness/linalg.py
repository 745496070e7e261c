"""modular rank probes and exact kernels for sparse systems over a number field"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

from flint import fmpq, fmpq_mat, fmpz, nmod_mat, nmod_poly  # mypy: disable-error-code="import-untyped"

from .errors import NoGoodPrimeError
from .exactcore import FieldElement, NumberField, to_fmpq

LOGGER: logging.Logger = logging.getLogger(__name__)

PRIME_CEILING: int = 2**31 - 1  # primes are searched downward from here
PRIME_FLOOR: int = 2**29
PROBE_PRIMES: int = 3  # primes made available per field


@dataclass(frozen=True)
class GoodPrime:
    """a prime with a root of the minimal polynomial, defining K -> F_p"""
    prime: int
    root: int

    def image(self, element: FieldElement) -> int:
        """reduce a field element modulo p, generator mapped to root"""
        total: int = 0
        for coefficient in reversed(element.coeffs):
            total = (total * self.root + coefficient.numerator * pow(coefficient.denominator, -1, self.prime)) \
                % self.prime
        return total


@lru_cache(maxsize=None)
def good_primes(number_field: NumberField, count: int = PROBE_PRIMES, ceiling: int = PRIME_CEILING) -> tuple[GoodPrime, ...]:
    """the first primes below ceiling where the minimal polynomial has a root"""
    found: list[GoodPrime] = []
    candidate: int = ceiling if ceiling % 2 else ceiling - 1
    while len(found) < count:
        if candidate < PRIME_FLOOR:
            raise NoGoodPrimeError(detail=f"fewer than {count} good primes for {number_field.label} above {PRIME_FLOOR}")
        if fmpz(candidate).is_prime() and all(c.denominator % candidate for c in number_field.minpoly):
            root: Optional[int] = _smallest_root(number_field, candidate)
            if root is not None:
                found.append(GoodPrime(candidate, root))
        candidate -= 2
    LOGGER.debug(f"good primes for {number_field.label}: {[(p.prime, p.root) for p in found]}")
    return tuple(found)


def _smallest_root(number_field: NumberField, prime: int) -> Optional[int]:
    """smallest root of the minimal polynomial modulo prime, None if there is none"""
    reduced: list[int] = [c.numerator * pow(c.denominator, -1, prime) % prime for c in number_field.minpoly]
    _, factors = nmod_poly(reduced, prime).factor()
    roots: list[int] = []
    for factor, _ in factors:
        if factor.degree() == 1:
            constant, leading = (int(c) for c in factor.coeffs())
            roots.append(-constant * pow(leading, -1, prime) % prime)
    return min(roots) if roots else None


def _pivot_columns(echelon: nmod_mat, rank: int, ncols: int) -> list[int]:
    """leading column of each nonzero row of a reduced row echelon form"""
    pivots: list[int] = []
    column: int = 0
    for row in range(rank):
        while column < ncols and int(echelon[row, column]) == 0:
            column += 1
        pivots.append(column)
        column += 1
    return pivots


@dataclass
class KernelResult:
    """exactly verified kernel basis"""
    dimension: int
    vectors: list[list[FieldElement]] = dataclass_field(default_factory=list)
    prime: int = 0
    rank: int = 0


class SparseMatrix:
    """column-sparse matrix over a number field"""

    def __init__(self, number_field: NumberField, nrows: int, ncols: int):
        """empty matrix"""
        self.field: NumberField = number_field
        self.nrows: int = nrows
        self.ncols: int = ncols
        self.columns: list[dict[int, FieldElement]] = [{} for _ in range(ncols)]

    def set(self, row: int, column: int, value: FieldElement) -> None:
        """store a nonzero entry"""
        if not value.is_zero():
            self.columns[column][row] = value

    def add(self, row: int, column: int, value: FieldElement) -> None:
        """accumulate into an entry"""
        current: Optional[FieldElement] = self.columns[column].get(row)
        total: FieldElement = value if current is None else current + value
        if total.is_zero():
            self.columns[column].pop(row, None)
        else:
            self.columns[column][row] = total

    def modular(self, prime: GoodPrime) -> nmod_mat:
        """dense image modulo prime"""
        entries: list[int] = [0] * (self.nrows * self.ncols)
        images: dict[int, int] = {}
        for column, entries_of_column in enumerate(self.columns):
            for row, value in entries_of_column.items():
                key: int = id(value)
                if key not in images:
                    images[key] = prime.image(value)
                entries[row * self.ncols + column] = images[key]
        return nmod_mat(self.nrows, self.ncols, entries, prime.prime)

    def rank_mod(self, prime: GoodPrime) -> int:
        """rank modulo a good prime, a lower bound for the rank over the field"""
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return int(self.modular(prime).rank())

    def apply(self, vector: Sequence[FieldElement]) -> list[FieldElement]:
        """matrix times vector"""
        result: list[FieldElement] = [self.field.zero] * self.nrows
        for column, entries_of_column in enumerate(self.columns):
            if vector[column].is_zero():
                continue
            for row, value in entries_of_column.items():
                result[row] = result[row] + value * vector[column]
        return result

    def annihilates(self, vector: Sequence[FieldElement]) -> bool:
        """exact check that the vector is in the kernel"""
        return all(value.is_zero() for value in self.apply(vector))

    def exact_kernel(self, primes: Sequence[GoodPrime],
                     verify: Optional[Callable[[list[FieldElement]], bool]] = None) -> KernelResult:
        """kernel basis lifted from the modular pivot structure and verified exactly"""
        check: Callable[[list[FieldElement]], bool] = verify or self.annihilates
        if self.nrows == 0:
            return KernelResult(dimension=self.ncols, vectors=self._solve_free([], [], list(range(self.ncols))))
        for prime in primes:
            reduced: nmod_mat = self.modular(prime)
            echelon, rank = reduced.rref()
            rank = int(rank)
            pivots: list[int] = _pivot_columns(echelon, rank, self.ncols)
            pivot_set: set[int] = set(pivots)
            free: list[int] = [c for c in range(self.ncols) if c not in pivot_set]
            if not free:
                return KernelResult(dimension=0, prime=prime.prime, rank=rank)
            rows: list[int] = _pivot_columns(reduced.transpose().rref()[0], rank, self.nrows) if rank else []
            vectors: list[list[FieldElement]] = self._solve_free(rows, pivots, free)
            if all(check(vector) for vector in vectors):
                LOGGER.debug(f"kernel of {self.nrows}x{self.ncols} system: dimension {len(free)}, prime {prime.prime}")
                return KernelResult(dimension=len(free), vectors=vectors, prime=prime.prime, rank=rank)
            LOGGER.warning(f"prime {prime.prime} is unlucky for a {self.nrows}x{self.ncols} system, trying the next")
        raise NoGoodPrimeError(detail=f"no prime among {[p.prime for p in primes]} gave a verified kernel")

    def _solve_free(self, rows: list[int], pivots: list[int], free: list[int]) -> list[list[FieldElement]]:
        """solve A[rows, pivots] x = -A[rows, f] for each free column f over Q"""
        degree: int = self.field.degree
        size: int = len(pivots)
        vectors: list[list[FieldElement]] = []
        if size == 0:
            for column in free:
                vector: list[FieldElement] = [self.field.zero] * self.ncols
                vector[column] = self.field.one
                vectors.append(vector)
            return vectors
        row_position: dict[int, int] = {row: i for i, row in enumerate(rows)}
        blocks: dict[int, list[list[Fraction]]] = {}

        def block(value: FieldElement) -> list[list[Fraction]]:
            key: int = id(value)
            if key not in blocks:
                blocks[key] = value.multiplication_matrix()
            return blocks[key]

        system: fmpq_mat = fmpq_mat(degree * size, degree * size)
        for j, column in enumerate(pivots):
            for row, value in self.columns[column].items():
                i: Optional[int] = row_position.get(row)
                if i is None:
                    continue
                matrix: list[list[Fraction]] = block(value)
                for a in range(degree):
                    for b in range(degree):
                        if matrix[a][b]:
                            system[degree * i + a, degree * j + b] = to_fmpq(matrix[a][b])
        right: fmpq_mat = fmpq_mat(degree * size, len(free))
        for k, column in enumerate(free):
            for row, value in self.columns[column].items():
                i = row_position.get(row)
                if i is None:
                    continue
                for a, coefficient in enumerate(value.coeffs):
                    if coefficient:
                        right[degree * i + a, k] = to_fmpq(-coefficient)
        solution: fmpq_mat = system.solve(right)
        for k, column in enumerate(free):
            vector = [self.field.zero] * self.ncols
            vector[column] = self.field.one
            for j, pivot in enumerate(pivots):
                vector[pivot] = self.field.element(solution[degree * j + b, k] for b in range(degree))
            vectors.append(vector)
        return vectors
