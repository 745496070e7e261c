"""projective points and lines over a number field, with duality and incidence"""
from __future__ import annotations

from typing import Sequence, Union

from .errors import ArrangementValueError, FieldMismatchError, ProportionalInputsError
from .exactcore import FieldElement, NumberField

Coordinates = tuple[FieldElement, FieldElement, FieldElement]


def normalize(coords: Sequence[FieldElement]) -> Coordinates:
    """scale so the first nonzero coordinate is one"""
    if len(coords) != 3:
        raise ArrangementValueError(f"expected 3 homogeneous coordinates, got {len(coords)}")
    field: NumberField = coords[0].field
    for value in coords[1:]:
        if value.field is not field and value.field != field:
            raise FieldMismatchError(field, value.field)
    lead: FieldElement = next((c for c in coords if not c.is_zero()), field.zero)
    if lead.is_zero():
        raise ArrangementValueError("all homogeneous coordinates are zero")
    if lead.is_one():
        return coords[0], coords[1], coords[2]
    inverse: FieldElement = lead.inverse()
    return coords[0] * inverse, coords[1] * inverse, coords[2] * inverse


def cross(left: Coordinates, right: Coordinates) -> tuple[FieldElement, FieldElement, FieldElement]:
    """cross product of homogeneous triples"""
    return (left[1] * right[2] - left[2] * right[1],
            left[2] * right[0] - left[0] * right[2],
            left[0] * right[1] - left[1] * right[0])


def dot(left: Coordinates, right: Coordinates) -> FieldElement:
    """bilinear pairing of a point with a line"""
    return left[0] * right[0] + left[1] * right[1] + left[2] * right[2]


class _Projective:
    """shared behaviour of normalized coordinate triples"""

    __slots__ = ('coords', '_key')
    _kind: str = ''

    def __init__(self, coords: Sequence[FieldElement]):
        """normalize on construction"""
        self.coords: Coordinates = normalize(coords)
        self._key: tuple = tuple(c.coeffs for c in self.coords)

    @property
    def field(self) -> NumberField:
        """coefficient field"""
        return self.coords[0].field

    def sort_key(self) -> tuple:
        """lexicographic on the rational coefficient vectors"""
        return self._key

    def __eq__(self, other: object) -> bool:
        """exact equality of normalized forms"""
        if type(other) is not type(self):
            return NotImplemented
        return self.field == other.field and self._key == other._key  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        """hash on the normalized form"""
        return hash((self._kind, self._key))

    def __lt__(self, other: _Projective) -> bool:
        """deterministic ordering"""
        return self._key < other._key

    def to_json(self) -> list:
        """three canonical element vectors"""
        return [c.to_json() for c in self.coords]

    def substitute_generator(self, image: FieldElement) -> _Projective:
        """apply a field automorphism or embedding to every coordinate"""
        return type(self)([c.substitute(image) for c in self.coords])


class ProjPoint(_Projective):
    """a point (x:y:z) of the projective plane"""

    _kind = 'point'

    @classmethod
    def of(cls, number_field: NumberField, *values: Union[int, str]) -> ProjPoint:
        """build from integers or generator text"""
        return cls([number_field.parse(v) for v in values])

    def __str__(self) -> str:
        """(a:b:c)"""
        return '(' + ':'.join(str(c) for c in self.coords) + ')'

    def __repr__(self) -> str:
        """debug representation"""
        return f"ProjPoint{self}"


class ProjLine(_Projective):
    """a line ax+by+cz=0"""

    _kind = 'line'

    @classmethod
    def of(cls, number_field: NumberField, *values: Union[int, str]) -> ProjLine:
        """build from integers or generator text"""
        return cls([number_field.parse(v) for v in values])

    def through(self) -> tuple[Coordinates, Coordinates]:
        """two distinct points spanning the line"""
        a, b, c = self.coords
        zero: FieldElement = self.field.zero
        candidates: list[Coordinates] = [(zero, c, -b), (c, zero, -a), (b, -a, zero)]
        spanning: list[Coordinates] = [p for p in candidates if not all(v.is_zero() for v in p)]
        first: Coordinates = spanning[0]
        for second in spanning[1:]:
            if not all(v.is_zero() for v in cross(first, second)):
                return first, second
        raise ArrangementValueError(f"cannot parametrize {self}")

    def __str__(self) -> str:
        """readable equation"""
        pieces: list[str] = []
        for value, name in zip(self.coords, ('x', 'y', 'z')):
            if value.is_zero():
                continue
            text: str = str(value)
            if text == '1':
                pieces.append(name)
            elif text == '-1':
                pieces.append(f"-{name}")
            else:
                pieces.append(f"({text})*{name}" if ' ' in text else f"{text}*{name}")
        return ' + '.join(pieces).replace('+ -', '- ') + ' = 0'

    def __repr__(self) -> str:
        """debug representation"""
        return f"ProjLine({self})"


def dualize(obj: Union[ProjPoint, ProjLine]) -> Union[ProjLine, ProjPoint]:
    """point (a:b:c) <-> line ax+by+cz=0"""
    if isinstance(obj, ProjLine):
        return ProjPoint(obj.coords)
    return ProjLine(obj.coords)


def meet(first: ProjLine, second: ProjLine) -> ProjPoint:
    """intersection point of two distinct lines"""
    product: tuple = cross(first.coords, second.coords)
    if all(v.is_zero() for v in product):
        raise ProportionalInputsError(detail=f"meet of coincident lines {first}")
    return ProjPoint(product)


def join(first: ProjPoint, second: ProjPoint) -> ProjLine:
    """line through two distinct points"""
    product: tuple = cross(first.coords, second.coords)
    if all(v.is_zero() for v in product):
        raise ProportionalInputsError(detail=f"join of coincident points {first}")
    return ProjLine(product)


def incident(point: ProjPoint, line: ProjLine) -> bool:
    """exact test a*x + b*y + c*z == 0"""
    if point.field != line.field:
        raise FieldMismatchError(point.field, line.field)
    return dot(point.coords, line.coords).is_zero()
