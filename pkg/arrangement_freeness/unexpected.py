"""unexpected curves and Lefschetz failures read off freeness data"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field

from .errors import ArrangementValueError

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler

SLP_RANGE: int = 2


@dataclass
class UnexpectedReport:
    """existence and degrees of unexpected curves for the dual point set"""
    d: int
    d1: int
    max_mult: int
    admits: bool = False
    degrees: list[int] = dataclass_field(default_factory=list)

    def to_dict(self) -> dict:
        """serializable form"""
        return {"d": self.d, "d1": self.d1, "max_mult": self.max_mult, "admits": self.admits,
                "degrees": self.degrees, "slp_failures": [failure.to_dict() for failure in slp_failures(self)]}


@dataclass(frozen=True)
class SlpFailure:
    """multiplication by L^range fails maximal rank in the given degree"""
    power: int
    degree: int
    j: int  # index of the criterion, degree = j - 1
    unexpected_degree: int

    def to_dict(self) -> dict:
        """serializable form"""
        return {"range": self.power, "degree": self.degree, "j": self.j, "unexpected_degree": self.unexpected_degree}


def unexpected_degrees(d: int, d1: int, max_mult: int) -> UnexpectedReport:
    """unexpected curves exist iff max_mult <= d1 + 1 < d / 2, in degrees d1 < j <= d - d1 - 2"""
    if d < 3 or not 1 <= d1 <= d - 1 or max_mult < 2:
        raise ArrangementValueError(f"need d >= 3, 1 <= d1 <= d - 1, max_mult >= 2; got ({d}, {d1}, {max_mult})")
    report: UnexpectedReport = UnexpectedReport(d, d1, max_mult)
    report.admits = max_mult <= d1 + 1 and 2 * (d1 + 1) < d
    if report.admits:
        report.degrees = list(range(d1 + 1, d - d1 - 1))
    LOGGER.debug(f"unexpected curves for d={d}, d1={d1}, m={max_mult}: {report.degrees or 'none'}")
    return report


def slp_failures(report: UnexpectedReport) -> list[SlpFailure]:
    """an unexpected curve of degree u is a failure in range 2 and degree u - 2"""
    return [SlpFailure(SLP_RANGE, u - 2, u - 1, u) for u in report.degrees]
