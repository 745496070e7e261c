"""univariate polynomials over a number field, and roots that lie in the field"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Optional, Sequence

from flint import fmpq_poly  # mypy: disable-error-code="import-untyped"

from .exactcore import FieldElement, NumberField, bareiss_determinant, to_fmpq

LOGGER: logging.Logger = logging.getLogger(__name__)

SHIFT_ATTEMPTS: int = 12  # Trager shifts tried before giving up on a squarefree norm


class UniPoly:
    """dense polynomial in one variable X over a NumberField, constant-first"""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field: NumberField, coeffs: Sequence[FieldElement]):
        """trim trailing zeros"""
        trimmed: list[FieldElement] = list(coeffs)
        while trimmed and trimmed[-1].is_zero():
            trimmed.pop()
        self.field: NumberField = field
        self.coeffs: list[FieldElement] = trimmed

    @classmethod
    def from_rational(cls, field: NumberField, poly: fmpq_poly) -> UniPoly:
        """lift a polynomial over Q"""
        return cls(field, [field.scalar(c) for c in poly.coeffs()])

    @classmethod
    def linear(cls, root: FieldElement) -> UniPoly:
        """X - root"""
        return cls(root.field, [-root, root.field.one])

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        """no coefficients"""
        return not self.coeffs

    @property
    def leading(self) -> FieldElement:
        """leading coefficient"""
        return self.coeffs[-1]

    def __add__(self, other: UniPoly) -> UniPoly:
        """sum"""
        size: int = max(len(self.coeffs), len(other.coeffs))
        zero: FieldElement = self.field.zero
        return UniPoly(self.field, [(self.coeffs[i] if i < len(self.coeffs) else zero)
                                    + (other.coeffs[i] if i < len(other.coeffs) else zero) for i in range(size)])

    def __neg__(self) -> UniPoly:
        """negation"""
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: UniPoly) -> UniPoly:
        """difference"""
        return self + (-other)

    def __mul__(self, other: UniPoly) -> UniPoly:
        """product"""
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field, [])
        result: list[FieldElement] = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                result[i + j] = result[i + j] + a * b
        return UniPoly(self.field, result)

    def scale(self, factor: FieldElement) -> UniPoly:
        """multiply by a constant"""
        return UniPoly(self.field, [c * factor for c in self.coeffs])

    def __divmod__(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        """long division"""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        remainder: list[FieldElement] = list(self.coeffs)
        quotient: list[FieldElement] = [self.field.zero] * max(len(remainder) - other.degree, 1)
        inverse: FieldElement = other.leading.inverse()
        for position in range(len(remainder) - 1, other.degree - 1, -1):
            factor: FieldElement = remainder[position] * inverse
            if factor.is_zero():
                continue
            shift: int = position - other.degree
            quotient[shift] = factor
            for k, coefficient in enumerate(other.coeffs):
                remainder[shift + k] = remainder[shift + k] - factor * coefficient
        return UniPoly(self.field, quotient), UniPoly(self.field, remainder[:other.degree])

    def __mod__(self, other: UniPoly) -> UniPoly:
        """remainder"""
        return divmod(self, other)[1]

    def __eq__(self, other: object) -> bool:
        """coefficientwise equality"""
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        """hash on coefficients"""
        return hash(tuple(c.coeffs for c in self.coeffs))

    def monic(self) -> UniPoly:
        """divide by the leading coefficient"""
        return self if self.is_zero() else self.scale(self.leading.inverse())

    def gcd(self, other: UniPoly) -> UniPoly:
        """monic greatest common divisor"""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> UniPoly:
        """formal derivative"""
        return UniPoly(self.field, [c * k for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, value: FieldElement) -> FieldElement:
        """Horner evaluation"""
        result: FieldElement = self.field.zero
        for coefficient in reversed(self.coeffs):
            result = result * value + coefficient
        return result

    def shift(self, amount: FieldElement) -> UniPoly:
        """the polynomial X -> p(X + amount)"""
        step: UniPoly = UniPoly(self.field, [amount, self.field.one])
        result: UniPoly = UniPoly(self.field, [])
        for coefficient in reversed(self.coeffs):
            result = result * step + UniPoly(self.field, [coefficient])
        return result

    def squarefree_part(self) -> UniPoly:
        """p / gcd(p, p') made monic"""
        if self.degree <= 1:
            return self.monic()
        common: UniPoly = self.gcd(self.derivative())
        return divmod(self, common)[0].monic() if common.degree > 0 else self.monic()

    def norm(self) -> fmpq_poly:
        """product of all conjugates, a polynomial over Q"""
        degree: int = self.field.degree
        matrices: list[list[list]] = [c.multiplication_matrix() for c in self.coeffs]
        entries: list[list[fmpq_poly]] = [
            [fmpq_poly([to_fmpq(matrix[i][j]) for matrix in matrices]) for j in range(degree)]
            for i in range(degree)]
        return bareiss_determinant(entries, fmpq_poly([1]), lambda a, b: a // b, lambda a: a.degree() < 0)

    def __str__(self) -> str:
        """readable form in X"""
        pieces: list[str] = []
        for power in range(self.degree, -1, -1):
            coefficient: FieldElement = self.coeffs[power]
            if coefficient.is_zero():
                continue
            monomial: str = '' if power == 0 else ('X' if power == 1 else f"X^{power}")
            pieces.append(f"({coefficient})*{monomial}" if monomial else f"({coefficient})")
        return ' + '.join(pieces) if pieces else '0'


def _is_squarefree(poly: fmpq_poly) -> bool:
    """gcd with the derivative is constant"""
    if poly.degree() <= 1:
        return True
    derivative: fmpq_poly = fmpq_poly([c * k for k, c in enumerate(poly.coeffs())][1:])
    return poly.gcd(derivative).degree() == 0


def factor_over_field(poly: UniPoly) -> list[UniPoly]:
    """monic irreducible factors of the squarefree part, via a squarefree norm"""
    if poly.degree <= 0:
        return []
    base: UniPoly = poly.squarefree_part()
    if base.degree == 1:
        return [base]
    generator: FieldElement = poly.field.gen
    for attempt in range(SHIFT_ATTEMPTS):
        offset: int = (attempt + 1) // 2 * (1 if attempt % 2 else -1)
        amount: FieldElement = generator * offset
        shifted: UniPoly = base.shift(amount)
        norm: fmpq_poly = shifted.norm()
        if not _is_squarefree(norm):
            continue
        _, rational_factors = norm.factor()
        factors: list[UniPoly] = []
        for rational_factor, _ in rational_factors:
            piece: UniPoly = UniPoly.from_rational(poly.field, rational_factor).gcd(shifted)
            if piece.degree > 0:
                factors.append(piece.shift(-amount).monic())
        LOGGER.debug(f"factored degree {base.degree} polynomial over {poly.field.label} with shift {offset}: "
                     f"degrees {[f.degree for f in factors]}")
        return factors
    raise ArithmeticError(f"no squarefree norm found for {poly} after {SHIFT_ATTEMPTS} shifts")


@dataclass
class RootSplit:
    """roots in the field plus the factors that do not split"""
    roots: list[FieldElement] = dataclass_field(default_factory=list)
    unsplit: list[UniPoly] = dataclass_field(default_factory=list)

    @property
    def splits(self) -> bool:
        """every factor is linear"""
        return not self.unsplit


def roots_in_field(poly: UniPoly) -> RootSplit:
    """distinct roots of poly lying in its field"""
    split: RootSplit = RootSplit()
    for factor in factor_over_field(poly):
        if factor.degree == 1:
            split.roots.append(-factor.coeffs[0])
        else:
            split.unsplit.append(factor)
    split.roots.sort(key=lambda root: root.sort_key())
    return split


@dataclass
class BinaryRootSplit:
    """roots (s:t) of a binary form"""
    points: list[tuple[FieldElement, FieldElement]] = dataclass_field(default_factory=list)
    unsplit: list[UniPoly] = dataclass_field(default_factory=list)


def binary_form_roots(coeffs: Sequence[FieldElement]) -> Optional[BinaryRootSplit]:
    """roots of sum c_k s^(d-k) t^k; None when the form vanishes identically"""
    if all(c.is_zero() for c in coeffs):
        return None
    field: NumberField = coeffs[0].field
    dehomogenized: UniPoly = UniPoly(field, list(coeffs))
    result: BinaryRootSplit = BinaryRootSplit()
    split: RootSplit = roots_in_field(dehomogenized)
    result.points.extend((field.one, root) for root in split.roots)
    result.unsplit.extend(split.unsplit)
    if dehomogenized.degree < len(coeffs) - 1:
        result.points.append((field.zero, field.one))
    return result
