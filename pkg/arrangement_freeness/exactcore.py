"""exact arithmetic in number fields Q[t]/(p(t)) and in K[x, y, z]"""
from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence, TypeVar, Union

from flint import fmpq, fmpq_poly  # mypy: disable-error-code="import-untyped"

from .errors import (ArrangementValueError, FieldDivisionByZeroError,
                     FieldMismatchError, InexactDivisionError,
                     ReducibleMinpolyError)

LOGGER: logging.Logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Exponent = tuple[int, int, int]
VARIABLES: tuple[str, str, str] = ('x', 'y', 'z')

_T = TypeVar('_T')


def to_fraction(value: Union[int, Fraction, fmpq]) -> Fraction:
    """convert any exact rational to a python Fraction"""
    if isinstance(value, fmpq):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def to_fmpq(value: Union[int, Fraction, fmpq]) -> fmpq:
    """convert any exact rational to a flint rational"""
    if isinstance(value, fmpq):
        return value
    value = Fraction(value)
    return fmpq(value.numerator, value.denominator)


def poly_coefficients(poly: fmpq_poly, length: int) -> tuple[Fraction, ...]:
    """constant-first coefficients padded to the given length"""
    coeffs: list[Fraction] = [to_fraction(c) for c in poly.coeffs()]
    return tuple(coeffs + [Fraction(0)] * (length - len(coeffs)))


def bareiss_determinant(matrix: Sequence[Sequence[_T]], one: _T, divide: Callable[[_T, _T], _T],
                        is_zero: Callable[[_T], bool]) -> _T:
    """fraction-free determinant over an integral domain with exact division"""
    size: int = len(matrix)
    rows: list[list[_T]] = [list(row) for row in matrix]
    if size == 0:
        return one
    sign: int = 1
    previous: _T = one
    for k in range(size - 1):
        if is_zero(rows[k][k]):
            swap: Optional[int] = next((i for i in range(k + 1, size) if not is_zero(rows[i][k])), None)
            if swap is None:
                return rows[k][k] * 0  # type: ignore[operator]
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot: _T = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = divide(rows[i][j] * pivot - rows[i][k] * rows[k][j], previous)  # type: ignore[operator]
        previous = pivot
    determinant: _T = rows[size - 1][size - 1]
    return determinant if sign > 0 else -determinant  # type: ignore[operator]


class NumberField:
    """Q[t]/(minpoly), minpoly monic and given constant-first"""

    def __init__(self, label: str, minpoly: Sequence[Rational], symbol: str = 't'):
        """validate the defining polynomial"""
        coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in minpoly)
        if len(coeffs) < 2:
            raise ArrangementValueError(f"{label}: minimal polynomial must have degree >= 1, got {list(coeffs)}")
        if coeffs[-1] != 1:
            raise ArrangementValueError(f"{label}: minimal polynomial must be monic, got {list(coeffs)}")
        self.label: str = label
        self.minpoly: tuple[Fraction, ...] = coeffs
        self.symbol: str = symbol
        self.modulus: fmpq_poly = fmpq_poly([to_fmpq(c) for c in coeffs])
        self.degree: int = len(coeffs) - 1
        self._zero: Optional[FieldElement] = None
        self._one: Optional[FieldElement] = None

    def __eq__(self, other: object) -> bool:
        """fields are equal when label and minimal polynomial agree"""
        if self is other:
            return True
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.minpoly == other.minpoly and self.label == other.label

    def __hash__(self) -> int:
        """hash on the defining data"""
        return hash((self.label, self.minpoly))

    def __repr__(self) -> str:
        """short representation"""
        return f"NumberField({self.label})"

    def __str__(self) -> str:
        """the label"""
        return self.label

    @property
    def is_rational(self) -> bool:
        """degree one means Q itself"""
        return self.degree == 1

    def element(self, coeffs: Iterable[Union[Rational, fmpq]]) -> FieldElement:
        """build an element from constant-first coefficients in the generator"""
        return FieldElement(self, fmpq_poly([to_fmpq(c) for c in coeffs]))

    def scalar(self, value: Union[Rational, fmpq]) -> FieldElement:
        """embed a rational number"""
        return FieldElement(self, fmpq_poly([to_fmpq(value)]), reduced=True)

    @property
    def zero(self) -> FieldElement:
        """additive identity"""
        if self._zero is None:
            self._zero = self.scalar(0)
        return self._zero

    @property
    def one(self) -> FieldElement:
        """multiplicative identity"""
        if self._one is None:
            self._one = self.scalar(1)
        return self._one

    @property
    def gen(self) -> FieldElement:
        """the class of t"""
        return FieldElement(self, fmpq_poly([0, 1]))

    _TERM: re.Pattern = re.compile(r'^(?:(\d+)(?:/(\d+))?)?\*?(?:([a-z]\w*)(?:\^(\d+))?)?$')

    def parse(self, text: Union[str, int]) -> FieldElement:
        """parse a generator expression such as '-e - 1', '1/2*r' or '2*z^3'"""
        if isinstance(text, int):
            return self.scalar(text)
        compact: str = text.replace(' ', '')
        if not compact:
            raise ArrangementValueError(f"empty field element text for {self.label}")
        total: FieldElement = self.zero
        for match in re.finditer(r'([+-]?)([^+-]+)', compact):
            sign, body = match.group(1), match.group(2)
            term: Optional[re.Match] = self._TERM.match(body)
            if term is None or not body:
                raise ArrangementValueError(f"cannot parse term '{body}' of '{text}' over {self.label}")
            numerator, denominator, symbol, power = term.groups()
            value: Fraction = Fraction(int(numerator) if numerator else 1, int(denominator) if denominator else 1)
            if symbol is not None and symbol != self.symbol:
                raise ArrangementValueError(f"unknown symbol '{symbol}' in '{text}', {self.label} uses '{self.symbol}'")
            if symbol is None and numerator is None:
                raise ArrangementValueError(f"cannot parse term '{body}' of '{text}'")
            exponent: int = (int(power) if power else 1) if symbol else 0
            piece: FieldElement = self.gen ** exponent * value
            total = total - piece if sign == '-' else total + piece
        return total

    def to_json(self) -> dict:
        """serializable form {label, minpoly}"""
        return {"label": self.label, "symbol": self.symbol,
                "minpoly": [[c.numerator, c.denominator] for c in self.minpoly]}

    @classmethod
    def from_json(cls, data: Mapping) -> NumberField:
        """inverse of to_json, built-in labels resolve to the registry instance"""
        minpoly: list[Fraction] = [Fraction(int(num), int(den)) for num, den in data["minpoly"]]
        label: str = data["label"]
        if label in BUILTIN_FIELDS and BUILTIN_FIELDS[label].minpoly == tuple(minpoly):
            return BUILTIN_FIELDS[label]
        return cls(label, minpoly, data.get("symbol", 't'))


class FieldElement:
    """an element of a NumberField held as a reduced flint polynomial"""

    __slots__ = ('field', '_poly', '_key')

    def __init__(self, field: NumberField, poly: fmpq_poly, reduced: bool = False):
        """reduce modulo the minimal polynomial unless the caller guarantees it"""
        self.field: NumberField = field
        self._poly: fmpq_poly = poly if reduced or poly.degree() < field.degree else poly % field.modulus
        self._key: Optional[tuple[Fraction, ...]] = None

    @property
    def poly(self) -> fmpq_poly:
        """the canonical representative"""
        return self._poly

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """constant-first coefficient vector of length g"""
        if self._key is None:
            self._key = poly_coefficients(self._poly, self.field.degree)
        return self._key

    def is_zero(self) -> bool:
        """exact zero test"""
        return self._poly.degree() < 0

    def is_one(self) -> bool:
        """exact unit test"""
        return self._poly.degree() == 0 and self._poly.coeffs()[0] == 1

    def __bool__(self) -> bool:
        """nonzero elements are truthy"""
        return not self.is_zero()

    def _coerce(self, other: object) -> FieldElement:
        """bring a rational or an element of the same field into this field"""
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(self.field, other.field)
            return other
        if isinstance(other, (int, Fraction, fmpq)):
            return self.field.scalar(other)
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    def __add__(self, other: object) -> FieldElement:
        """field addition"""
        return FieldElement(self.field, self._poly + self._coerce(other)._poly, reduced=True)

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        """field subtraction"""
        return FieldElement(self.field, self._poly - self._coerce(other)._poly, reduced=True)

    def __rsub__(self, other: object) -> FieldElement:
        """reflected subtraction"""
        return FieldElement(self.field, self._coerce(other)._poly - self._poly, reduced=True)

    def __mul__(self, other: object) -> FieldElement:
        """field multiplication"""
        if isinstance(other, (int, Fraction, fmpq)):
            return FieldElement(self.field, self._poly * to_fmpq(other), reduced=True)
        return FieldElement(self.field, self._poly * self._coerce(other)._poly)

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        """additive inverse"""
        return FieldElement(self.field, -self._poly, reduced=True)

    def __truediv__(self, other: object) -> FieldElement:
        """multiply by the inverse"""
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: object) -> FieldElement:
        """reflected division"""
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> FieldElement:
        """integer powers by repeated squaring"""
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result: FieldElement = self.field.one
        base: FieldElement = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> FieldElement:
        """inverse by the extended Euclidean algorithm against the minimal polynomial"""
        if self.is_zero():
            raise FieldDivisionByZeroError(detail=f"inverse of zero in {self.field.label}")
        # invariant: remainder_i == cofactor_i * self (mod minpoly)
        previous, remainder = self.field.modulus, self._poly
        previous_cofactor, cofactor = fmpq_poly([0]), fmpq_poly([1])
        while remainder.degree() > 0:
            quotient: fmpq_poly = previous // remainder
            previous, remainder = remainder, previous - quotient * remainder
            previous_cofactor, cofactor = cofactor, previous_cofactor - quotient * cofactor
        if remainder.degree() < 0:
            raise ReducibleMinpolyError(label=self.field.label, gcd=str(previous))
        constant: fmpq = remainder.coeffs()[0]
        return FieldElement(self.field, cofactor * (fmpq(1) / constant))

    def __eq__(self, other: object) -> bool:
        """exact equality, rationals compare through the field"""
        if isinstance(other, FieldElement):
            return (other.field is self.field or other.field == self.field) and self._poly == other._poly
        if isinstance(other, (int, Fraction)):
            return self.coeffs == self.field.scalar(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        """hash on the canonical coefficient vector"""
        return hash(self.coeffs)

    def sort_key(self) -> tuple[Fraction, ...]:
        """lexicographic key on the rational coefficient vector"""
        return self.coeffs

    def substitute(self, image: FieldElement) -> FieldElement:
        """evaluate the representative at another element (automorphisms and embeddings)"""
        result: FieldElement = image.field.zero
        for coefficient in reversed(self.coeffs):
            result = result * image + coefficient
        return result

    def multiplication_matrix(self) -> list[list[Fraction]]:
        """matrix of x -> self*x on the power basis, columns are images of t^j"""
        degree: int = self.field.degree
        columns: list[tuple[Fraction, ...]] = []
        power: fmpq_poly = fmpq_poly([1])
        shift: fmpq_poly = fmpq_poly([0, 1])
        for _ in range(degree):
            columns.append(poly_coefficients((self._poly * power) % self.field.modulus, degree))
            power = (power * shift) % self.field.modulus
        return [[columns[j][i] for j in range(degree)] for i in range(degree)]

    def to_json(self) -> list[list[int]]:
        """vector of [numerator, denominator] pairs"""
        return [[c.numerator, c.denominator] for c in self.coeffs]

    def __str__(self) -> str:
        """generator notation, e.g. '-e - 1'"""
        pieces: list[str] = []
        for power in range(self.field.degree - 1, -1, -1):
            coefficient: Fraction = self.coeffs[power]
            if coefficient == 0:
                continue
            symbol: str = '' if power == 0 else (self.field.symbol if power == 1 else f"{self.field.symbol}^{power}")
            magnitude: Fraction = abs(coefficient)
            if symbol:
                text = symbol if magnitude == 1 else f"{magnitude}*{symbol}"
            else:
                text = str(magnitude)
            pieces.append(('- ' if coefficient < 0 else '+ ') + text)
        if not pieces:
            return '0'
        joined: str = ' '.join(pieces)
        return joined[2:] if joined.startswith('+ ') else '-' + joined[2:]

    def __repr__(self) -> str:
        """debug representation"""
        return f"FieldElement({self}, {self.field.label})"


def element_from_json(field: NumberField, data: Union[str, int, Sequence]) -> FieldElement:
    """read either the canonical [[num, den], ...] vector or generator text"""
    if isinstance(data, (str, int)):
        return field.parse(data)
    return field.element(Fraction(int(num), int(den)) for num, den in data)


def _cyclotomic(label: str, coeffs: Sequence[int]) -> NumberField:
    """helper for the registry"""
    return NumberField(label, coeffs, symbol='z')


BUILTIN_FIELDS: dict[str, NumberField] = {
    'Q': NumberField('Q', [0, 1], symbol='t'),
    'Q(e)': NumberField('Q(e)', [1, 1, 1], symbol='e'),
    'Q(r)': NumberField('Q(r)', [-2, 0, 1], symbol='r'),
    'Q(sqrt3)': NumberField('Q(sqrt3)', [-3, 0, 1], symbol='s'),
    'Q(sqrt5)': NumberField('Q(sqrt5)', [-5, 0, 1], symbol='s'),
    'Q(z12)': _cyclotomic('Q(z12)', [1, 0, -1, 0, 1]),
    'Q(z16)': _cyclotomic('Q(z16)', [1, 0, 0, 0, 0, 0, 0, 0, 1]),
    'Q(z20)': _cyclotomic('Q(z20)', [1, 0, -1, 0, 1, 0, -1, 0, 1]),
    'Q(z24)': _cyclotomic('Q(z24)', [1, 0, 0, 0, -1, 0, 0, 0, 1]),
}


def builtin_field(label: str) -> NumberField:
    """look up a field of the built-in registry"""
    try:
        return BUILTIN_FIELDS[label]
    except KeyError as err:
        raise ArrangementValueError(f"unknown field {label}, expected one of {list(BUILTIN_FIELDS)}") from err


def cyclotomic_field(order: int) -> NumberField:
    """Q(zeta_order) from the registry"""
    return builtin_field(f"Q(z{order})")


_EMBEDDINGS: dict[tuple[str, str], Callable[[NumberField], FieldElement]] = {
    ('Q(e)', 'Q(z12)'): lambda target: target.gen ** 4,
    ('Q(sqrt3)', 'Q(z12)'): lambda target: target.gen + target.gen ** 11,
    ('Q(r)', 'Q(z16)'): lambda target: target.gen ** 2 + target.gen ** 14,
    ('Q(sqrt5)', 'Q(z20)'): lambda target: (target.gen ** 4 + target.gen ** 16) * 2 + 1,
}


def embedding(source: NumberField, target: NumberField) -> FieldElement:
    """image of the generator of source in target for the registered embeddings"""
    if source == target:
        return target.gen
    if source.is_rational:
        return target.scalar(source.gen.coeffs[0])
    try:
        return _EMBEDDINGS[(source.label, target.label)](target)
    except KeyError as err:
        raise ArrangementValueError(f"no embedding of {source.label} into {target.label} is registered") from err


class MultiPoly:
    """sparse polynomial in x, y, z over a NumberField"""

    __slots__ = ('field', 'terms', '_degree')

    def __init__(self, field: NumberField, terms: Optional[Mapping[Exponent, Union[FieldElement, Rational]]] = None):
        """store nonzero terms only"""
        self.field: NumberField = field
        self.terms: dict[Exponent, FieldElement] = {}
        for exponent, value in (terms or {}).items():
            coefficient: FieldElement = value if isinstance(value, FieldElement) else field.scalar(value)
            if coefficient.field is not field and coefficient.field != field:
                raise FieldMismatchError(field, coefficient.field)
            if not coefficient.is_zero():
                self.terms[tuple(exponent)] = coefficient  # type: ignore[index]
        self._degree: Optional[int] = None

    @classmethod
    def _trusted(cls, field: NumberField, terms: dict[Exponent, FieldElement]) -> MultiPoly:
        """wrap a dictionary already free of zero coefficients"""
        poly: MultiPoly = cls.__new__(cls)
        poly.field = field
        poly.terms = terms
        poly._degree = None
        return poly

    @classmethod
    def constant(cls, field: NumberField, value: Union[FieldElement, Rational]) -> MultiPoly:
        """degree zero polynomial"""
        return cls(field, {(0, 0, 0): value})

    @classmethod
    def variable(cls, field: NumberField, name: str) -> MultiPoly:
        """one of x, y, z"""
        exponent: list[int] = [0, 0, 0]
        exponent[VARIABLES.index(name)] = 1
        return cls(field, {tuple(exponent): 1})  # type: ignore[dict-item]

    @classmethod
    def linear_form(cls, coeffs: Sequence[FieldElement]) -> MultiPoly:
        """a*x + b*y + c*z"""
        field: NumberField = coeffs[0].field
        return cls(field, {(1, 0, 0): coeffs[0], (0, 1, 0): coeffs[1], (0, 0, 1): coeffs[2]})

    @classmethod
    def conic(cls, coeffs: Sequence[FieldElement]) -> MultiPoly:
        """coefficients of x^2, xy, xz, y^2, yz, z^2"""
        field: NumberField = coeffs[0].field
        return cls(field, dict(zip(CONIC_MONOMIALS, coeffs)))

    @property
    def degree(self) -> int:
        """total degree, -1 for the zero polynomial"""
        if self._degree is None:
            self._degree = max((sum(exponent) for exponent in self.terms), default=-1)
        return self._degree

    def is_zero(self) -> bool:
        """no terms"""
        return not self.terms

    def is_homogeneous(self) -> bool:
        """all terms of the same total degree"""
        return len({sum(exponent) for exponent in self.terms}) <= 1

    def coefficient(self, exponent: Exponent) -> FieldElement:
        """coefficient of a monomial, zero if absent"""
        return self.terms.get(exponent, self.field.zero)

    def _check(self, other: MultiPoly) -> None:
        """both operands over the same field"""
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatchError(self.field, other.field)

    def __add__(self, other: MultiPoly) -> MultiPoly:
        """polynomial addition"""
        self._check(other)
        terms: dict[Exponent, FieldElement] = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            total: FieldElement = terms[exponent] + coefficient if exponent in terms else coefficient
            if total.is_zero():
                terms.pop(exponent, None)
            else:
                terms[exponent] = total
        return MultiPoly._trusted(self.field, terms)

    def __neg__(self) -> MultiPoly:
        """negate every coefficient"""
        return MultiPoly._trusted(self.field, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        """polynomial subtraction"""
        return self + (-other)

    def __mul__(self, other: Union[MultiPoly, FieldElement, Rational]) -> MultiPoly:
        """polynomial product, or scaling by a field element"""
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        terms: dict[Exponent, FieldElement] = {}
        for (a1, b1, c1), left in self.terms.items():
            for (a2, b2, c2), right in other.terms.items():
                exponent: Exponent = (a1 + a2, b1 + b2, c1 + c2)
                product: FieldElement = left * right
                terms[exponent] = terms[exponent] + product if exponent in terms else product
        return MultiPoly._trusted(self.field, {e: c for e, c in terms.items() if not c.is_zero()})

    __rmul__ = __mul__

    def scale(self, factor: Union[FieldElement, Rational]) -> MultiPoly:
        """multiply every coefficient by a constant"""
        if isinstance(factor, FieldElement):
            if factor.is_zero():
                return MultiPoly(self.field)
        elif factor == 0:
            return MultiPoly(self.field)
        return MultiPoly._trusted(self.field, {e: c * factor for e, c in self.terms.items()})

    def __pow__(self, exponent: int) -> MultiPoly:
        """nonnegative integer powers"""
        result: MultiPoly = MultiPoly.constant(self.field, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        """exact equality of term maps"""
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self) -> int:
        """hash on sorted terms"""
        return hash(tuple(sorted((e, c.coeffs) for e, c in self.terms.items())))

    def partial(self, variable: Union[int, str]) -> MultiPoly:
        """partial derivative with respect to x, y or z"""
        index: int = VARIABLES.index(variable) if isinstance(variable, str) else variable
        terms: dict[Exponent, FieldElement] = {}
        for exponent, coefficient in self.terms.items():
            power: int = exponent[index]
            if power:
                lowered: list[int] = list(exponent)
                lowered[index] -= 1
                terms[tuple(lowered)] = coefficient * power  # type: ignore[index]
        return MultiPoly._trusted(self.field, terms)

    def gradient(self) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
        """the three partials"""
        return self.partial(0), self.partial(1), self.partial(2)

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        """value at a coordinate triple"""
        powers: list[dict[int, FieldElement]] = [{0: self.field.one}, {0: self.field.one}, {0: self.field.one}]

        def power_of(index: int, exponent: int) -> FieldElement:
            cache: dict[int, FieldElement] = powers[index]
            if exponent not in cache:
                cache[exponent] = power_of(index, exponent - 1) * point[index]
            return cache[exponent]

        total: FieldElement = self.field.zero
        for (a, b, c), coefficient in self.terms.items():
            total = total + coefficient * power_of(0, a) * power_of(1, b) * power_of(2, c)
        return total

    def leading_exponent(self) -> Exponent:
        """lexicographically largest exponent with x > y > z"""
        return max(self.terms)

    def exact_divide(self, divisor: MultiPoly) -> MultiPoly:
        """quotient of an exact division, InexactDivisionError otherwise"""
        self._check(divisor)
        if divisor.is_zero():
            raise FieldDivisionByZeroError(detail="polynomial division by zero")
        lead_exponent: Exponent = divisor.leading_exponent()
        lead_inverse: FieldElement = divisor.terms[lead_exponent].inverse()
        if len(divisor.terms) == 1:
            terms: dict[Exponent, FieldElement] = {}
            for exponent, coefficient in self.terms.items():
                shifted: Exponent = (exponent[0] - lead_exponent[0], exponent[1] - lead_exponent[1],
                                     exponent[2] - lead_exponent[2])
                if min(shifted) < 0:
                    raise InexactDivisionError(dividend=self, divisor=divisor, remainder=self)
                terms[shifted] = coefficient * lead_inverse
            return MultiPoly._trusted(self.field, terms)
        remainder: dict[Exponent, FieldElement] = dict(self.terms)
        quotient: dict[Exponent, FieldElement] = {}
        while remainder:
            top: Exponent = max(remainder)
            shift: Exponent = (top[0] - lead_exponent[0], top[1] - lead_exponent[1], top[2] - lead_exponent[2])
            if min(shift) < 0:
                raise InexactDivisionError(dividend=self, divisor=divisor,
                                           remainder=MultiPoly._trusted(self.field, remainder))
            factor: FieldElement = remainder[top] * lead_inverse
            quotient[shift] = factor
            for exponent, coefficient in divisor.terms.items():
                target: Exponent = (exponent[0] + shift[0], exponent[1] + shift[1], exponent[2] + shift[2])
                value: FieldElement = remainder.get(target, self.field.zero) - coefficient * factor
                if value.is_zero():
                    remainder.pop(target, None)
                else:
                    remainder[target] = value
        return MultiPoly._trusted(self.field, quotient)

    def coefficients_in(self, variable: int) -> dict[int, MultiPoly]:
        """split into powers of one variable, coefficients free of it"""
        pieces: dict[int, dict[Exponent, FieldElement]] = {}
        for exponent, coefficient in self.terms.items():
            reduced: list[int] = list(exponent)
            power: int = reduced[variable]
            reduced[variable] = 0
            pieces.setdefault(power, {})[tuple(reduced)] = coefficient  # type: ignore[index]
        return {power: MultiPoly._trusted(self.field, terms) for power, terms in pieces.items()}

    def restrict_to_line(self, start: Sequence[FieldElement], end: Sequence[FieldElement]) -> list[FieldElement]:
        """binary form F(s*start + t*end), coefficient k belongs to s^(d-k) t^k"""
        degree: int = self.degree
        result: list[FieldElement] = [self.field.zero] * (degree + 1)
        one: FieldElement = self.field.one
        # each coordinate is the binary linear form start_i*s + end_i*t
        linear: list[list[FieldElement]] = [[start[i], end[i]] for i in range(3)]
        power_cache: dict[tuple[int, int], list[FieldElement]] = {}

        def binary_power(index: int, exponent: int) -> list[FieldElement]:
            key = (index, exponent)
            if key not in power_cache:
                if exponent == 0:
                    power_cache[key] = [one]
                else:
                    power_cache[key] = _binary_multiply(binary_power(index, exponent - 1), linear[index])
            return power_cache[key]

        for (a, b, c), coefficient in self.terms.items():
            product: list[FieldElement] = _binary_multiply(_binary_multiply(binary_power(0, a), binary_power(1, b)),
                                                           binary_power(2, c))
            for k, value in enumerate(product):
                if k < len(result):
                    result[k] = result[k] + coefficient * value
        return result

    def substitute_generator(self, image: FieldElement) -> MultiPoly:
        """apply a field automorphism or embedding coefficientwise"""
        return MultiPoly(image.field, {e: c.substitute(image) for e, c in self.terms.items()})

    def lift(self, field: NumberField) -> MultiPoly:
        """view a polynomial with rational coefficients over another field"""
        if field is self.field or field == self.field:
            return self
        if not self.field.is_rational:
            raise FieldMismatchError(self.field, field)
        return MultiPoly._trusted(field, {e: field.scalar(c.coeffs[0]) for e, c in self.terms.items()})

    def monic(self) -> MultiPoly:
        """scale so the leading coefficient is one"""
        if self.is_zero():
            return self
        return self.scale(self.terms[self.leading_exponent()].inverse())

    def is_proportional(self, other: MultiPoly) -> bool:
        """equal up to a nonzero constant"""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self.terms) != set(other.terms):
            return False
        return self.monic() == other.monic()

    def sorted_terms(self) -> Iterator[tuple[Exponent, FieldElement]]:
        """terms in descending lexicographic order"""
        for exponent in sorted(self.terms, reverse=True):
            yield exponent, self.terms[exponent]

    def to_json(self) -> list:
        """list of [exponent, coefficient vector] in canonical order"""
        return [[list(exponent), coefficient.to_json()] for exponent, coefficient in self.sorted_terms()]

    @classmethod
    def from_json(cls, field: NumberField, data: Sequence) -> MultiPoly:
        """inverse of to_json, coefficients may be generator text"""
        return cls(field, {tuple(exponent): element_from_json(field, value)  # type: ignore[misc]
                           for exponent, value in data})

    def __str__(self) -> str:
        """human readable, e.g. 'x^2 + (-e - 1)*y*z'"""
        if self.is_zero():
            return '0'
        pieces: list[str] = []
        for exponent, coefficient in self.sorted_terms():
            monomial: str = '*'.join(
                (name if power == 1 else f"{name}^{power}") for name, power in zip(VARIABLES, exponent) if power)
            text: str = str(coefficient)
            if not monomial:
                pieces.append(f"({text})" if ' ' in text else text)
            elif text == '1':
                pieces.append(monomial)
            elif text == '-1':
                pieces.append(f"-{monomial}")
            else:
                pieces.append(f"({text})*{monomial}" if ' ' in text else f"{text}*{monomial}")
        return ' + '.join(pieces).replace('+ -', '- ')

    def __repr__(self) -> str:
        """debug representation"""
        return f"MultiPoly({self}, {self.field.label})"


CONIC_MONOMIALS: tuple[Exponent, ...] = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))


def _binary_multiply(left: Sequence[FieldElement], right: Sequence[FieldElement]) -> list[FieldElement]:
    """product of two binary forms given by coefficient lists"""
    result: list[FieldElement] = [left[0].field.zero] * (len(left) + len(right) - 1)
    for i, a in enumerate(left):
        if a.is_zero():
            continue
        for j, b in enumerate(right):
            result[i + j] = result[i + j] + a * b
    return result


def product(polys: Iterable[MultiPoly], field: NumberField) -> MultiPoly:
    """expanded product of polynomials"""
    result: MultiPoly = MultiPoly.constant(field, 1)
    for poly in polys:
        result = result * poly
    return result


def resultant(first: MultiPoly, second: MultiPoly, variable: Union[int, str]) -> MultiPoly:
    """Sylvester resultant eliminating one variable, rows of the second polynomial on top

    res_y(x - y, x + y) = 2x
    """
    first._check(second)  # pylint: disable=protected-access
    index: int = VARIABLES.index(variable) if isinstance(variable, str) else variable
    field: NumberField = first.field
    left: dict[int, MultiPoly] = first.coefficients_in(index)
    right: dict[int, MultiPoly] = second.coefficients_in(index)
    m: int = max(left, default=0)
    n: int = max(right, default=0)
    zero: MultiPoly = MultiPoly(field)
    size: int = m + n
    matrix: list[list[MultiPoly]] = []
    for shift in range(m):
        row: list[MultiPoly] = [zero] * size
        for power, coefficient in right.items():
            row[shift + n - power] = coefficient
        matrix.append(row)
    for shift in range(n):
        row = [zero] * size
        for power, coefficient in left.items():
            row[shift + m - power] = coefficient
        matrix.append(row)
    LOGGER.debug(f"resultant in {VARIABLES[index]}: Sylvester size {size} (degrees {m}, {n})")
    return bareiss_determinant(matrix, MultiPoly.constant(field, 1),
                               lambda a, b: a.exact_divide(b), lambda a: a.is_zero())
