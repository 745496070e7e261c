"""Milnor numbers, Euler characteristics and Alexander polynomial bookkeeping"""
from __future__ import annotations

import csv
import logging
import re
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from math import gcd
from pathlib import Path
from typing import Any, Mapping, Optional, Union

from flint import fmpq_poly  # mypy: disable-error-code="import-untyped"

from .codec.definitions import Comparison
from .errors import ArrangementValueError, NegativeMultiplicityError
from .freeness import tjurina_total

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler


def total_milnor(summary: Any) -> int:
    """sum of (m - 1)^2, ordinary singularities only"""
    return tjurina_total(summary)


def euler_complement(d: int, mu: int) -> int:
    """(d-1)(d-2) + 1 - mu"""
    if d < 1:
        raise ArrangementValueError(f"degree must be positive, got {d}")
    return (d - 1) * (d - 2) + 1 - mu


@dataclass
class MonodromyTable:
    """n_2(q) for q = 3..d, zero below"""
    rows: dict[int, int] = dataclass_field(default_factory=dict)

    def n2(self, q: int) -> int:
        """table value, zero for q < 3 or missing rows"""
        return self.rows.get(q, 0) if q >= 3 else 0

    def covers(self, d: int) -> bool:
        """rows present for every q in 3..d"""
        return all(q in self.rows for q in range(3, d + 1))

    @classmethod
    def trivial(cls, d: int, r: int) -> MonodromyTable:
        """table of a curve with trivial monodromy, only n2(d) = r - 1"""
        rows: dict[int, int] = {q: 0 for q in range(3, d)}
        rows[d] = r - 1
        return cls(rows)


def read_table(path: Union[str, Path]) -> MonodromyTable:
    """two column CSV (q, n2), header optional"""
    rows: dict[int, int] = {}
    with open(path, 'r', encoding='utf-8', newline='') as table_file:
        for record in csv.reader(table_file):
            if not record or record[0].strip().startswith('#'):
                continue
            try:
                q, value = int(record[0]), int(record[1])
            except ValueError:
                continue  # header
            except IndexError as err:
                raise ArrangementValueError(f"{path}: row {record} needs two columns") from err
            if value < 0:
                raise NegativeMultiplicityError(q, value)
            rows[q] = value
    return MonodromyTable(rows)


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> fmpq_poly:
    """k-th cyclotomic polynomial by division of t^k - 1"""
    result: fmpq_poly = fmpq_poly([-1] + [0] * (k - 1) + [1])
    for j in range(1, k):
        if k % j == 0:
            result = result // cyclotomic(j)
    return result


def eigenvalue_order(q: int, d: int) -> int:
    """order of exp(-2 pi i q / d)"""
    return d // gcd(q, d)


@dataclass
class AlexanderSpec:
    """multiplicities m(alpha_q), q = 0..d-1"""
    d: int
    r: int
    mults: dict[int, int] = dataclass_field(default_factory=dict)

    def factored(self) -> dict[int, int]:
        """exponent of each cyclotomic factor Phi_k, k dividing d"""
        exponents: dict[int, int] = {}
        for q, multiplicity in sorted(self.mults.items()):
            k: int = eigenvalue_order(q, self.d)
            if k in exponents and exponents[k] != multiplicity:
                raise ArrangementValueError(f"conjugate eigenvalues of order {k} carry different multiplicities")
            exponents[k] = multiplicity
        return {k: e for k, e in sorted(exponents.items()) if e}

    @property
    def degree(self) -> int:
        """degree of the polynomial"""
        return sum(self.mults.values())

    def polynomial(self) -> fmpq_poly:
        """expanded product of the cyclotomic factors"""
        result: fmpq_poly = fmpq_poly([1])
        for k, exponent in self.factored().items():
            result = result * cyclotomic(k) ** exponent
        return result

    def __str__(self) -> str:
        """product of Phi_k powers"""
        pieces: list[str] = [f"Phi{k}^{e}" if e > 1 else f"Phi{k}" for k, e in self.factored().items()]
        return '*'.join(pieces) if pieces else '1'


def alexander_from_table(d: int, r: int, table: MonodromyTable) -> AlexanderSpec:
    """m(alpha_q) = n2(q) + n2(d - q), and m(1) = r - 1"""
    if not table.covers(d):
        raise ArrangementValueError(f"monodromy table does not cover q = 3..{d}")
    for q, value in table.rows.items():
        if value < 0:
            raise NegativeMultiplicityError(q, value)
    spec: AlexanderSpec = AlexanderSpec(d, r)
    for q in range(1, d):
        spec.mults[q] = table.n2(q) + table.n2(d - q)
    if table.n2(d) != r - 1:
        LOGGER.warning(f"table gives m(1) = {table.n2(d)} but the curve has {r} components")
    spec.mults[0] = r - 1
    spec.mults = dict(sorted(spec.mults.items()))
    return spec


_FACTOR: re.Pattern = re.compile(r'\(([^()]+)\)(?:\^(\d+))?')
_TERM: re.Pattern = re.compile(r'^(\d*)\*?(t(?:\^(\d+))?)?$')


def parse_univariate(text: str) -> fmpq_poly:
    """integer polynomial in t such as 't^2+t+1' or '2t-1'"""
    coeffs: dict[int, int] = {}
    for match in re.finditer(r'([+-]?)([^+-]+)', text.replace(' ', '')):
        sign, body = match.groups()
        term: Optional[re.Match] = _TERM.match(body)
        if term is None or not body:
            raise ArrangementValueError(f"cannot parse term '{body}' in '{text}'")
        number, variable, power = term.groups()
        value: int = int(number) if number else 1
        exponent: int = (int(power) if power else 1) if variable else 0
        coeffs[exponent] = coeffs.get(exponent, 0) + (-value if sign == '-' else value)
    return fmpq_poly([coeffs.get(i, 0) for i in range(max(coeffs, default=0) + 1)])


def parse_alexander(text: str, d: int, r: int) -> AlexanderSpec:
    """eigenvalue multiplicities of a literal like '(t^3+1)^4(t^2+t+1)^2(t-1)^11'"""
    remaining: fmpq_poly = fmpq_poly([1])
    compact: str = text.replace(' ', '')
    if _FACTOR.sub('', compact).strip('*'):
        raise ArrangementValueError(f"cannot parse Alexander polynomial '{text}'")
    for match in _FACTOR.finditer(compact):
        remaining = remaining * parse_univariate(match.group(1)) ** int(match.group(2) or 1)
    exponents: dict[int, int] = {}
    for k in (k for k in range(1, d + 1) if d % k == 0):
        factor: fmpq_poly = cyclotomic(k)
        while remaining.degree() >= factor.degree() and (remaining % factor).degree() < 0:
            remaining = remaining // factor
            exponents[k] = exponents.get(k, 0) + 1
    if remaining.degree() > 0:
        raise ArrangementValueError(f"'{text}' has roots that are not {d}-th roots of unity: {remaining}")
    spec: AlexanderSpec = AlexanderSpec(d, r)
    spec.mults = {q: exponents.get(eigenvalue_order(q, d), 0) for q in range(d)}
    return spec


@dataclass(frozen=True)
class EigenvalueComparison:
    """computed and stated multiplicity of one eigenvalue"""
    q: int
    computed: int
    stated: int

    @property
    def status(self) -> Comparison:
        """MATCH or MISMATCH"""
        return Comparison.MATCH if self.computed == self.stated else Comparison.MISMATCH


def compare_alexander(computed: AlexanderSpec, stated: AlexanderSpec) -> list[EigenvalueComparison]:
    """per eigenvalue agreement, only eigenvalues where either side is nonzero"""
    if computed.d != stated.d:
        raise ArrangementValueError(f"degrees differ: {computed.d} vs {stated.d}")
    return [EigenvalueComparison(q, computed.mults.get(q, 0), stated.mults.get(q, 0))
            for q in range(computed.d) if computed.mults.get(q, 0) or stated.mults.get(q, 0)]


@dataclass(frozen=True)
class DegreeIdentityReport:
    """degree bookkeeping of Delta^0 * Delta^1 * Delta^2 = (t^d - 1)^chi"""
    d: int
    chi: int
    degree_delta1: int
    degree_delta2: int

    @property
    def consistent(self) -> bool:
        """a polynomial Delta^2 needs a nonnegative degree"""
        return self.degree_delta2 >= 0

    def to_dict(self) -> dict:
        """serializable form"""
        return {"d": self.d, "chi": self.chi, "deg_delta1": self.degree_delta1,
                "deg_delta2": self.degree_delta2, "consistent": self.consistent}


def degree_identity_check(d: int, chi: int, alex: Union[AlexanderSpec, int]) -> DegreeIdentityReport:
    """deduce deg Delta^2 = d*chi - 1 - deg Delta^1"""
    degree_delta1: int = alex if isinstance(alex, int) else alex.degree
    return DegreeIdentityReport(d, chi, degree_delta1, d * chi - 1 - degree_delta1)


def mults_to_dict(spec: AlexanderSpec) -> Mapping[str, int]:
    """nonzero multiplicities keyed by q as text"""
    return {str(q): m for q, m in spec.mults.items() if m}
