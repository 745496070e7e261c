"""line arrangements, intersection lattices, rich lines and the point-line operators"""
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence, Union

from .errors import ArrangementValueError, FieldMismatchError, UnsupportedNError
from .exactcore import FieldElement, NumberField, builtin_field, cyclotomic_field
from .projgeom import ProjLine, ProjPoint, dualize, join, meet

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler

SUPPORTED_NGONS: tuple[int, ...] = (8, 10, 12)


@dataclass(frozen=True)
class ExactIn:
    """accept counts belonging to a fixed set"""
    values: frozenset[int]

    def __post_init__(self):
        """the set must be nonempty"""
        if not self.values:
            raise ArrangementValueError("ExactIn selector needs at least one value")

    def accepts(self, count: int) -> bool:
        """membership test"""
        return count in self.values

    def __str__(self) -> str:
        """selector text"""
        return 'exact:' + ','.join(str(v) for v in sorted(self.values))


@dataclass(frozen=True)
class AtLeast:
    """accept counts at or above a threshold"""
    threshold: int

    def __post_init__(self):
        """thresholds start at two"""
        if self.threshold < 2:
            raise ArrangementValueError(f"AtLeast threshold must be >= 2, got {self.threshold}")

    def accepts(self, count: int) -> bool:
        """threshold test"""
        return count >= self.threshold

    def __str__(self) -> str:
        """selector text"""
        return f"atleast:{self.threshold}"


Selector = Union[ExactIn, AtLeast]
MultSelector = Selector
CountSelector = Selector


def parse_selector(text: str) -> Selector:
    """read 'exact:2,3' or 'atleast:2'"""
    mode, _, values = text.strip().lower().partition(':')
    try:
        if mode == 'exact':
            return ExactIn(frozenset(int(v) for v in values.split(',') if v.strip()))
        if mode == 'atleast':
            return AtLeast(int(values))
    except ValueError as err:
        raise ArrangementValueError(f"bad selector '{text}': {err}") from err
    raise ArrangementValueError(f"bad selector '{text}', expected 'exact:N[,M...]' or 'atleast:N'")


class Arrangement:
    """a deduplicated, canonically ordered set of lines over one field"""

    def __init__(self, number_field: NumberField, lines: Iterable[ProjLine] = (), label: str = ''):
        """deduplicate and sort, duplicates are logged and dropped"""
        self.field: NumberField = number_field
        self.label: str = label
        self.dropped_duplicates: list[ProjLine] = []
        unique: dict[ProjLine, None] = {}
        for line in lines:
            if line.field != number_field:
                raise FieldMismatchError(number_field, line.field)
            if line in unique:
                LOGGER.warning(f"duplicate line {line} dropped from {label or 'arrangement'}")
                self.dropped_duplicates.append(line)
                continue
            unique[line] = None
        self.lines: tuple[ProjLine, ...] = tuple(sorted(unique))

    def __len__(self) -> int:
        """number of lines"""
        return len(self.lines)

    @property
    def is_empty(self) -> bool:
        """the empty arrangement is a legal operator result"""
        return not self.lines

    def as_set(self) -> frozenset[ProjLine]:
        """set of normalized lines, used for equality in reproductions"""
        return frozenset(self.lines)

    def index(self, line: ProjLine) -> int:
        """position of a line"""
        return self.lines.index(line)

    def substitute_generator(self, image: FieldElement, label: str = '') -> Arrangement:
        """apply a field automorphism or embedding to every line"""
        return Arrangement(image.field, (line.substitute_generator(image) for line in self.lines),  # type: ignore[misc]
                           label or self.label)

    def __str__(self) -> str:
        """short description"""
        return f"{self.label or 'arrangement'}: {len(self.lines)} lines over {self.field.label}"


def build(lines: Sequence[ProjLine], label: str = '') -> Arrangement:
    """arrangement from at least one line"""
    if not lines:
        raise ArrangementValueError("an arrangement needs at least one line")
    return Arrangement(lines[0].field, lines, label)


@dataclass(frozen=True)
class IncidencePoint:
    """an intersection point with the indices of the lines through it"""
    point: ProjPoint
    line_indices: tuple[int, ...]

    @property
    def multiplicity(self) -> int:
        """number of lines through the point"""
        return len(self.line_indices)


@dataclass
class LatticeSummary:
    """intersection points and the n_k table"""
    line_count: int
    points: list[IncidencePoint] = dataclass_field(default_factory=list)
    nk: dict[int, int] = dataclass_field(default_factory=dict)

    @property
    def pair_count(self) -> int:
        """sum over points of C(k, 2)"""
        return sum(count * comb(k, 2) for k, count in self.nk.items())

    @property
    def double_count_ok(self) -> bool:
        """every pair of lines meets in exactly one point"""
        return self.pair_count == comb(self.line_count, 2)

    @property
    def max_multiplicity(self) -> int:
        """largest k with n_k > 0"""
        return max(self.nk, default=0)

    def tjurina(self) -> int:
        """sum of (k - 1)^2 over the points"""
        return sum(count * (k - 1) ** 2 for k, count in self.nk.items())

    def points_with(self, selector: Selector) -> list[ProjPoint]:
        """intersection points whose multiplicity passes the selector"""
        return [p.point for p in self.points if selector.accepts(p.multiplicity)]


def nk_table(multiplicities: Iterable[int]) -> dict[int, int]:
    """sorted multiplicity histogram"""
    return dict(sorted(Counter(multiplicities).items()))


def lattice(arr: Arrangement) -> LatticeSummary:
    """all pairwise meets grouped by point"""
    if len(arr) < 2:
        raise ArrangementValueError(f"a lattice needs at least 2 lines, {arr} has {len(arr)}")
    incidences: dict[ProjPoint, set[int]] = {}
    for i, j in combinations(range(len(arr.lines)), 2):
        point: ProjPoint = meet(arr.lines[i], arr.lines[j])
        incidences.setdefault(point, set()).update((i, j))
    points: list[IncidencePoint] = [IncidencePoint(point, tuple(sorted(indices)))
                                    for point, indices in sorted(incidences.items())]
    summary: LatticeSummary = LatticeSummary(len(arr), points, nk_table(p.multiplicity for p in points))
    if not summary.double_count_ok:
        # meets are exact, so a failure here is a bug rather than bad input
        raise ArithmeticError(f"pair double count {summary.pair_count} != C({len(arr)}, 2) for {arr}")
    LOGGER.debug(f"lattice of {arr}: n_k={summary.nk}")
    return summary


@dataclass
class RichLineReport:
    """lines through at least two input points with their incidence counts"""
    lines: list[tuple[ProjLine, int]] = dataclass_field(default_factory=list)
    lr: dict[int, int] = dataclass_field(default_factory=dict)


def rich_lines(points: Sequence[ProjPoint], selector: CountSelector) -> RichLineReport:
    """every line through two of the points, filtered on its point count"""
    if len(points) < 2:
        raise ArrangementValueError(f"rich lines need at least 2 points, got {len(points)}")
    if len(set(points)) != len(points):
        raise ArrangementValueError("rich lines need pairwise distinct points")
    through: dict[ProjLine, set[int]] = {}
    for i, j in combinations(range(len(points)), 2):
        through.setdefault(join(points[i], points[j]), set()).update((i, j))
    report: RichLineReport = RichLineReport(lr=nk_table(len(indices) for indices in through.values()))
    report.lines = [(line, len(indices)) for line, indices in sorted(through.items())
                    if selector.accepts(len(indices))]
    return report


def lambda_operator(arr: Arrangement, mult_sel: MultSelector, count_sel: CountSelector,
                    label: str = '') -> Arrangement:
    """lines carrying a selected number of the selected intersection points"""
    selected: list[ProjPoint] = lattice(arr).points_with(mult_sel)
    name: str = label or f"lambda[{mult_sel};{count_sel}]({arr.label})"
    if len(selected) < 2:
        LOGGER.info(f"{name}: {len(selected)} selected points, empty result")
        return Arrangement(arr.field, (), name)
    report: RichLineReport = rich_lines(selected, count_sel)
    result: Arrangement = Arrangement(arr.field, (line for line, _ in report.lines), name)
    LOGGER.info(f"{name}: {len(selected)} selected points, {len(result)} lines")
    return result


def lambda_at_least(arr: Arrangement, n: int, m: int) -> Arrangement:
    """lines with at least m points of multiplicity at least n"""
    return lambda_operator(arr, AtLeast(n), AtLeast(m))


def dual_points(arr: Arrangement) -> list[ProjPoint]:
    """the points D(L)"""
    return [dualize(line) for line in arr.lines]  # type: ignore[misc]


HESSE_LINES: tuple[tuple[str, str, str], ...] = (
    ('1', '0', '0'), ('0', '1', '0'), ('0', '0', '1'),
    ('1', '1', '1'), ('1', '1', 'e'), ('1', '1', '-e - 1'),
    ('1', 'e', '1'), ('1', '-e - 1', '1'), ('e', '1', '1'),
    ('-e - 1', '1', '1'), ('e', '-e - 1', '1'), ('e', '1', '-e - 1'),
)

OCTAGON_LINES: tuple[tuple[str, str, str], ...] = (
    ('1', 'r - 1', '-1'), ('1', 'r + 1', '-r - 1'), ('1', '-r - 1', 'r + 1'), ('1', '-r + 1', '1'),
    ('1', 'r - 1', '1'), ('1', 'r + 1', 'r + 1'), ('1', '-r - 1', '-r - 1'), ('1', '-r + 1', '-1'),
)


def gen_hesse() -> Arrangement:
    """the 12 lines of the Hesse configuration over Q(e)"""
    number_field: NumberField = builtin_field('Q(e)')
    return Arrangement(number_field, (ProjLine.of(number_field, *coeffs) for coeffs in HESSE_LINES), 'H')


def gen_c8() -> Arrangement:
    """side lines of the regular octagon over Q(r)"""
    number_field: NumberField = builtin_field('Q(r)')
    return Arrangement(number_field, (ProjLine.of(number_field, *coeffs) for coeffs in OCTAGON_LINES), 'C8')


def gen_ngon(n: int) -> Arrangement:
    """side lines x*cos(t_k) + y*sin(t_k) = cos(pi/n), t_k = (2k+1)pi/n, over Q(zeta_2n)"""
    if n not in SUPPORTED_NGONS:
        raise UnsupportedNError(n, SUPPORTED_NGONS)
    number_field: NumberField = cyclotomic_field(2 * n)
    zeta: FieldElement = number_field.gen
    imaginary: FieldElement = zeta ** (n // 2)
    half: FieldElement = number_field.scalar(1) / 2

    def cosine(m: int) -> FieldElement:
        return (zeta ** m + zeta ** (-m)) * half

    def sine(m: int) -> FieldElement:
        return (zeta ** m - zeta ** (-m)) * half / imaginary

    apothem: FieldElement = cosine(1)
    lines: list[ProjLine] = [ProjLine([cosine(2 * k + 1), sine(2 * k + 1), -apothem]) for k in range(n)]
    return Arrangement(number_field, lines, f"C{n}")


def galois_conjugate(arr: Arrangement) -> Arrangement:
    """apply the nontrivial automorphism of a quadratic field (e -> e^2, r -> -r)"""
    if arr.field.degree != 2:
        raise ArrangementValueError(f"conjugation is defined for quadratic fields, not {arr.field.label}")
    # for t^2 + b t + c the other root is -b - t
    image: FieldElement = arr.field.scalar(-arr.field.minpoly[1]) - arr.field.gen
    return arr.substitute_generator(image, f"{arr.label}^sigma")


def concurrent_triples(summary: LatticeSummary) -> list[tuple[int, int, int]]:
    """all triples of lines through a common point"""
    triples: list[tuple[int, int, int]] = []
    for point in summary.points:
        triples.extend(combinations(point.line_indices, 3))  # type: ignore[arg-type]
    return sorted(triples)


def find_line(arr: Arrangement, line: ProjLine) -> Optional[int]:
    """index of a line or None"""
    try:
        return arr.index(line)
    except ValueError:
        return None
