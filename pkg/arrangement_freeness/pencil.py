"""cubic pencils through nine points, their degenerate members, and conic-line arrangements"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations
from math import comb
from typing import Optional, Sequence, Union

from .arrangement import nk_table
from .codec.definitions import Factorization
from .errors import (ArrangementValueError, DegenerateInputError, NonOrdinarySingularityError,
                     NotAPencilError, NotInFieldError, RepeatedComponentError)
from .exactcore import Exponent, FieldElement, MultiPoly, NumberField, bareiss_determinant, resultant
from .freeness import CurveSpec, defining_poly, monomials
from .linalg import KernelResult, SparseMatrix, good_primes
from .projgeom import Coordinates, ProjLine, ProjPoint, incident, join, meet
from .univariate import BinaryRootSplit, RootSplit, UniPoly, binary_form_roots, roots_in_field

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler

CUBIC_MONOMIALS: list[Exponent] = monomials(3)


@dataclass
class CubicPencil:
    """span of two independent cubics through the base points"""
    basis: tuple[MultiPoly, MultiPoly]
    base_points: list[ProjPoint]

    @property
    def field(self) -> NumberField:
        """coefficient field"""
        return self.basis[0].field

    def member(self, lam: FieldElement, mu: FieldElement) -> MultiPoly:
        """lam*F + mu*G"""
        return self.basis[0].scale(lam) + self.basis[1].scale(mu)


def cubics_through(points: Sequence[ProjPoint]) -> CubicPencil:
    """kernel of the evaluation matrix on the ten cubic monomials"""
    if len(points) != 9 or len(set(points)) != 9:
        raise ArrangementValueError(f"a cubic pencil needs 9 distinct points, got {len(set(points))}")
    number_field: NumberField = points[0].field
    matrix: SparseMatrix = SparseMatrix(number_field, len(points), len(CUBIC_MONOMIALS))
    for row, point in enumerate(points):
        for column, exponent in enumerate(CUBIC_MONOMIALS):
            matrix.set(row, column, MultiPoly(number_field, {exponent: 1}).evaluate(point.coords))
    kernel: KernelResult = matrix.exact_kernel(good_primes(number_field))
    if kernel.dimension != 2:
        raise NotAPencilError(kernel.dimension)
    basis: list[MultiPoly] = [MultiPoly(number_field, dict(zip(CUBIC_MONOMIALS, vector))) for vector in kernel.vectors]
    LOGGER.debug(f"pencil through {len(points)} points: F={basis[0]}, G={basis[1]}")
    return CubicPencil((basis[0], basis[1]), list(points))


def conic_rank(conic: MultiPoly) -> int:
    """rank of the symmetric matrix of a conic, 3 means smooth"""
    c = conic.coefficient
    half: FieldElement = conic.field.scalar(1) / 2
    matrix: list[list[FieldElement]] = [
        [c((2, 0, 0)), c((1, 1, 0)) * half, c((1, 0, 1)) * half],
        [c((1, 1, 0)) * half, c((0, 2, 0)), c((0, 1, 1)) * half],
        [c((1, 0, 1)) * half, c((0, 1, 1)) * half, c((0, 0, 2))]]
    if not bareiss_determinant(matrix, conic.field.one, lambda a, b: a / b, lambda a: a.is_zero()).is_zero():
        return 3
    minors: list[FieldElement] = [matrix[i][k] * matrix[j][m] - matrix[i][m] * matrix[j][k]
                                  for i, j in combinations(range(3), 2) for k, m in combinations(range(3), 2)]
    if any(not value.is_zero() for value in minors):
        return 2
    return 1 if any(not value.is_zero() for row in matrix for value in row) else 0


@dataclass
class PencilMember:
    """a member lam*F + mu*G, split as line times conic when degenerate"""
    params: tuple[FieldElement, FieldElement]
    cubic: MultiPoly
    factorization: Factorization = Factorization.IRREDUCIBLE
    line: Optional[ProjLine] = None
    conic: Optional[MultiPoly] = None
    other_lines: list[ProjLine] = dataclass_field(default_factory=list)
    shared: bool = False  # the line divides every member

    @property
    def conic_smooth(self) -> bool:
        """the quotient conic is irreducible"""
        return self.conic is not None and conic_rank(self.conic) == 3

    def __str__(self) -> str:
        """params and factors"""
        lam, mu = self.params
        return f"({lam}:{mu}) {self.line} * [{self.conic}]" if self.line else f"({lam}:{mu}) {self.cubic}"


def _normalize_params(lam: FieldElement, mu: FieldElement) -> tuple[FieldElement, FieldElement]:
    """first nonzero entry one"""
    lead: FieldElement = lam if not lam.is_zero() else mu
    inverse: FieldElement = lead.inverse()
    return lam * inverse, mu * inverse


def degenerate_members(pencil: CubicPencil) -> list[PencilMember]:
    """members containing a line through at least two base points"""
    candidates: dict[ProjLine, int] = {}
    for first, second in combinations(pencil.base_points, 2):
        line: ProjLine = join(first, second)
        if line not in candidates:
            candidates[line] = sum(1 for p in pencil.base_points if incident(p, line))
    members: dict[tuple, PencilMember] = {}
    for line in sorted(candidates):
        start, end = line.through()
        f_restricted: list[FieldElement] = pencil.basis[0].restrict_to_line(start, end)
        g_restricted: list[FieldElement] = pencil.basis[1].restrict_to_line(start, end)
        linear: MultiPoly = MultiPoly.linear_form(line.coords)
        f_zero: bool = all(v.is_zero() for v in f_restricted)
        g_zero: bool = all(v.is_zero() for v in g_restricted)
        if f_zero and g_zero:
            LOGGER.warning(f"{line} is a component of every member, the pencil is not reduced")
            members[('shared', line.sort_key())] = PencilMember(
                (pencil.field.one, pencil.field.zero), pencil.basis[0], Factorization.DEGENERATE, line,
                pencil.basis[0].exact_divide(linear), shared=True)
            continue
        if any(not (f_restricted[i] * g_restricted[j] - f_restricted[j] * g_restricted[i]).is_zero()
               for i, j in combinations(range(4), 2)):
            continue
        index: int = next(i for i in range(4) if not (f_restricted[i].is_zero() and g_restricted[i].is_zero()))
        params: tuple[FieldElement, FieldElement] = _normalize_params(g_restricted[index], -f_restricted[index])
        key: tuple = tuple(p.coeffs for p in params)
        if key in members:
            members[key].other_lines.append(line)
            continue
        cubic: MultiPoly = pencil.member(*params)
        if candidates[line] != 3:
            raise ArithmeticError(f"line component {line} of the member {cubic} carries "
                                  f"{candidates[line]} base points, expected 3")
        members[key] = PencilMember(params, cubic, Factorization.DEGENERATE, line, cubic.exact_divide(linear))
        LOGGER.debug(f"degenerate member {members[key]}")
    return list(members.values())


@dataclass(frozen=True)
class ConicLinePoint:
    """a singular point with one smooth branch per component through it"""
    point: ProjPoint
    components: tuple[int, ...]
    tangents: tuple[ProjLine, ...]

    @property
    def multiplicity(self) -> int:
        """number of branches"""
        return len(self.components)

    @property
    def ordinary(self) -> bool:
        """branch tangents pairwise distinct"""
        return len(set(self.tangents)) == len(self.tangents)


@dataclass
class ConicLineLattice:
    """singular points of a union of lines and smooth conics"""
    degrees: list[int]
    points: list[ConicLinePoint] = dataclass_field(default_factory=list)
    nk: dict[int, int] = dataclass_field(default_factory=dict)

    @property
    def all_ordinary(self) -> bool:
        """every point ordinary"""
        return all(p.ordinary for p in self.points)

    @property
    def component_bezout(self) -> int:
        """sum over component pairs of deg_i * deg_j"""
        return sum(a * b for a, b in combinations(self.degrees, 2))

    @property
    def point_bezout(self) -> int:
        """sum over points of C(m, 2), transversal branches meet once"""
        return sum(count * comb(k, 2) for k, count in self.nk.items())

    def tau(self) -> int:
        """sum of (m - 1)^2"""
        return sum(count * (k - 1) ** 2 for k, count in self.nk.items())


def _point_on_line(start: Coordinates, end: Coordinates, s: FieldElement, t: FieldElement) -> ProjPoint:
    """s*start + t*end"""
    return ProjPoint([s * start[i] + t * end[i] for i in range(3)])


def _intersect_line_conic(line: ProjLine, conic: MultiPoly, pair: tuple[int, int]) -> list[ProjPoint]:
    """roots of the conic restricted to the line"""
    start, end = line.through()
    roots: Optional[BinaryRootSplit] = binary_form_roots(conic.restrict_to_line(start, end))
    if roots is None:
        raise DegenerateInputError(what=str(line), reason=f"contained in the conic {conic}")
    if roots.unsplit:
        raise NotInFieldError(pair=pair, factor=str(roots.unsplit[0]), label=conic.field.label)
    return [_point_on_line(start, end, s, t) for s, t in roots.points]


def _binary_coefficients(form: MultiPoly) -> list[FieldElement]:
    """coefficient k of x^(D-k) z^k of a binary form in x and z"""
    degree: int = form.degree
    return [form.coefficient((degree - k, 0, k)) for k in range(degree + 1)]


def _in_y(conic: MultiPoly, x0: FieldElement, z0: FieldElement) -> UniPoly:
    """the conic on the line of points (x0 : y : z0)"""
    number_field: NumberField = conic.field
    pieces: dict[int, MultiPoly] = conic.coefficients_in(1)
    point: list[FieldElement] = [x0, number_field.zero, z0]
    return UniPoly(number_field, [pieces[k].evaluate(point) if k in pieces else number_field.zero
                                  for k in range(max(pieces) + 1)])


def _intersect_conics(first: MultiPoly, second: MultiPoly, pair: tuple[int, int]) -> list[ProjPoint]:
    """eliminate y, then recover y from the common factor of both conics"""
    number_field: NumberField = first.field
    points: list[ProjPoint] = []
    apex: list[FieldElement] = [number_field.zero, number_field.one, number_field.zero]
    if first.evaluate(apex).is_zero() and second.evaluate(apex).is_zero():
        points.append(ProjPoint(apex))
    eliminated: MultiPoly = resultant(first, second, 'y')
    if eliminated.is_zero():
        raise RepeatedComponentError(*pair)
    if eliminated.degree <= 0:
        return points
    roots: Optional[BinaryRootSplit] = binary_form_roots(_binary_coefficients(eliminated))
    if roots is None:
        return points
    if roots.unsplit:
        raise NotInFieldError(pair=pair, factor=str(roots.unsplit[0]), label=number_field.label)
    for x0, z0 in roots.points:
        common: UniPoly = _in_y(first, x0, z0).gcd(_in_y(second, x0, z0))
        if common.degree <= 0:
            continue  # the common point is the apex (0:1:0)
        split: RootSplit = roots_in_field(common)
        if split.unsplit:
            raise NotInFieldError(pair=pair, factor=str(split.unsplit[0]), label=number_field.label)
        points.extend(ProjPoint([x0, y0, z0]) for y0 in split.roots)
    return points


def tangent_line(component: Union[ProjLine, MultiPoly], point: ProjPoint) -> ProjLine:
    """the line itself, or the gradient line of a conic"""
    if isinstance(component, ProjLine):
        return component
    return ProjLine([partial.evaluate(point.coords) for partial in component.gradient()])


def assemble_conic_line(members: Sequence[PencilMember]) -> tuple[CurveSpec, ConicLineLattice]:
    """components of the degenerate members and the singularities of their union"""
    degenerate: list[PencilMember] = [m for m in members if m.factorization == Factorization.DEGENERATE]
    if not degenerate:
        raise ArrangementValueError("no degenerate members to assemble")
    components: list[Union[ProjLine, MultiPoly]] = []
    for member in degenerate:
        if member.line is None or member.conic is None or not member.conic_smooth:
            raise DegenerateInputError(what=str(member), reason="does not split as a line and a smooth conic")
        components.append(member.line)
    for member in degenerate:
        components.append(member.conic)  # type: ignore[arg-type]
    curve: CurveSpec = defining_poly([c if isinstance(c, MultiPoly) else MultiPoly.linear_form(c.coords)
                                      for c in components], 'conic-line')
    return curve, conic_line_lattice(components)


def conic_line_lattice(components: Sequence[Union[ProjLine, MultiPoly]]) -> ConicLineLattice:
    """pairwise intersections of lines and smooth conics grouped by point, with branch tangents"""
    for index, component in enumerate(components):
        if isinstance(component, MultiPoly) and (component.degree != 2 or conic_rank(component) != 3):
            raise DegenerateInputError(what=f"component {index}", reason=f"not a smooth conic: {component}")
    incidences: dict[ProjPoint, set[int]] = {}
    for i, j in combinations(range(len(components)), 2):
        first, second = components[i], components[j]
        if isinstance(first, ProjLine) and isinstance(second, ProjLine):
            found: list[ProjPoint] = [meet(first, second)]
        elif isinstance(first, ProjLine):
            found = _intersect_line_conic(first, second, (i, j))  # type: ignore[arg-type]
        elif isinstance(second, ProjLine):
            found = _intersect_line_conic(second, first, (i, j))
        else:
            found = _intersect_conics(first, second, (i, j))
        for point in found:
            incidences.setdefault(point, set()).update((i, j))
    summary: ConicLineLattice = ConicLineLattice([1 if isinstance(c, ProjLine) else 2 for c in components])
    for point, indices in sorted(incidences.items()):
        ordered: tuple[int, ...] = tuple(sorted(indices))
        entry: ConicLinePoint = ConicLinePoint(point, ordered,
                                               tuple(tangent_line(components[k], point) for k in ordered))
        if not entry.ordinary:
            tangents: list[ProjLine] = list(entry.tangents)
            clash: tuple[int, int] = next((ordered[a], ordered[b]) for a, b in combinations(range(len(ordered)), 2)
                                          if tangents[a] == tangents[b])
            raise NonOrdinarySingularityError(point, clash)
        summary.points.append(entry)
    summary.nk = nk_table(p.multiplicity for p in summary.points)
    if summary.component_bezout != summary.point_bezout:
        raise ArithmeticError(f"Bezout audit failed: {summary.component_bezout} != {summary.point_bezout}")
    LOGGER.info(f"conic-line arrangement: {len(components)} components, n_k={summary.nk}, "
                f"Bezout {summary.component_bezout}")
    return summary


@dataclass
class RationalMap:
    """three forms of equal degree"""
    components: tuple[MultiPoly, MultiPoly, MultiPoly]

    def __post_init__(self):
        """equal degrees"""
        if len({c.degree for c in self.components}) != 1:
            raise DegenerateInputError(what="rational map",
                                       reason=f"components have degrees {[c.degree for c in self.components]}")


@dataclass(frozen=True)
class IndeterminateAt:
    """all three components vanish"""
    point: ProjPoint

    def __str__(self) -> str:
        """readable form"""
        return f"indeterminate at {self.point}"


def map_evaluate(rational_map: RationalMap, point: ProjPoint) -> Union[ProjPoint, IndeterminateAt]:
    """image point or the indeterminacy marker"""
    values: list[FieldElement] = [c.lift(point.field).evaluate(point.coords) for c in rational_map.components]
    if all(v.is_zero() for v in values):
        return IndeterminateAt(point)
    return ProjPoint(values)
