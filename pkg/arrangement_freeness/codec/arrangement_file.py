"""JSON files holding a field, lines, conics, points and polynomials"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field as dataclass_field
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from ..arrangement import Arrangement
from ..errors import ArrangementValueError
from ..exactcore import (BUILTIN_FIELDS, CONIC_MONOMIALS, MultiPoly, NumberField,
                         builtin_field, element_from_json)
from ..freeness import CurveSpec
from ..projgeom import ProjLine, ProjPoint

LOGGER: logging.Logger = logging.getLogger(__name__)


def _field_from_json(data: Union[str, Mapping]) -> NumberField:
    """a registry label or a {label, minpoly} object"""
    if isinstance(data, str):
        return builtin_field(data)
    if data.get("label") in BUILTIN_FIELDS and "minpoly" not in data:
        return BUILTIN_FIELDS[data["label"]]
    return NumberField.from_json(data)


def _triple(number_field: NumberField, values: Any, what: str) -> list:
    """three field elements from canonical vectors or generator text"""
    if not isinstance(values, list) or len(values) != 3:
        raise ArrangementValueError(f"{what} needs 3 coordinates, got {values}")
    return [element_from_json(number_field, value) for value in values]


@dataclass
class ArrangementFile:
    """contents of an arrangement file"""
    field: NumberField
    lines: list[ProjLine] = dataclass_field(default_factory=list)
    conics: list[MultiPoly] = dataclass_field(default_factory=list)
    points: list[ProjPoint] = dataclass_field(default_factory=list)
    polys: list[MultiPoly] = dataclass_field(default_factory=list)
    metadata: dict[str, str] = dataclass_field(default_factory=dict)

    @property
    def label(self) -> str:
        """metadata label"""
        return self.metadata.get("label", '')

    def arrangement(self) -> Arrangement:
        """the lines as an arrangement"""
        return Arrangement(self.field, self.lines, self.label)

    def curve(self) -> CurveSpec:
        """lines and conics as one curve"""
        components: list[MultiPoly] = [MultiPoly.linear_form(line.coords) for line in self.lines] + self.conics
        return CurveSpec(components, self.label)

    @classmethod
    def from_json(cls, data: Mapping) -> ArrangementFile:
        """parse a decoded document"""
        if "field" not in data:
            raise ArrangementValueError("arrangement file has no 'field' entry")
        number_field: NumberField = _field_from_json(data["field"])
        result: ArrangementFile = cls(number_field, metadata=dict(data.get("metadata", {})))
        result.lines = [ProjLine(_triple(number_field, values, "line")) for values in data.get("lines", [])]
        result.points = [ProjPoint(_triple(number_field, values, "point")) for values in data.get("points", [])]
        for values in data.get("conics", []):
            if len(values) != len(CONIC_MONOMIALS):
                raise ArrangementValueError(f"conic needs {len(CONIC_MONOMIALS)} coefficients, got {values}")
            result.conics.append(MultiPoly(number_field, {m: element_from_json(number_field, v)
                                                          for m, v in zip(CONIC_MONOMIALS, values)}))
        result.polys = [MultiPoly.from_json(number_field, terms) for terms in data.get("polys", [])]
        return result

    def to_json(self) -> dict:
        """canonical document, elements as [num, den] vectors"""
        data: dict[str, Any] = {"field": self.field.to_json(), "metadata": dict(sorted(self.metadata.items())),
                                "lines": [line.to_json() for line in self.lines]}
        if self.conics:
            data["conics"] = [[conic.coefficient(m).to_json() for m in CONIC_MONOMIALS] for conic in self.conics]
        if self.points:
            data["points"] = [point.to_json() for point in self.points]
        if self.polys:
            data["polys"] = [poly.to_json() for poly in self.polys]
        return data

    @classmethod
    def of(cls, arr: Arrangement, source: str = '') -> ArrangementFile:
        """wrap an arrangement for writing"""
        metadata: dict[str, str] = {"label": arr.label}
        if source:
            metadata["source"] = source
        return cls(arr.field, list(arr.lines), metadata=metadata)


def dumps(contents: ArrangementFile) -> str:
    """canonical text, stable across runs"""
    return json.dumps(contents.to_json(), indent=1, sort_keys=True) + '\n'


def loads(text: str) -> ArrangementFile:
    """parse text"""
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as err:
        raise ArrangementValueError(f"arrangement file is not JSON: {err}") from err
    if not isinstance(data, dict):
        raise ArrangementValueError("arrangement file must hold a JSON object")
    return ArrangementFile.from_json(data)


def read_arrangement_file(path: Union[str, Path]) -> ArrangementFile:
    """read and parse a file"""
    with open(path, 'r', encoding='utf-8') as arrangement_file:
        contents: ArrangementFile = loads(arrangement_file.read())
    LOGGER.debug(f"read {path}: {len(contents.lines)} lines, {len(contents.conics)} conics, "
                 f"{len(contents.points)} points over {contents.field.label}")
    return contents


def write_arrangement_file(path: Union[str, Path], contents: ArrangementFile,
                           source: Optional[str] = None) -> None:
    """write in canonical form"""
    if source:
        contents.metadata["source"] = source
    with open(path, 'w', encoding='utf-8') as arrangement_file:
        arrangement_file.write(dumps(contents))
