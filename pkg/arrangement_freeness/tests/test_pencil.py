"""test the cubic pencil, conic-line lattices and the sextic map"""
import random
from typing import Union

from common_test_base import CommonTestBase

from arrangement_freeness.codec.arrangement_file import ArrangementFile
from arrangement_freeness.codec.definitions import Factorization, Verdict
from arrangement_freeness.errors import (ArrangementValueError, DegenerateInputError, NonOrdinarySingularityError,
                                         NotAPencilError, NotInFieldError, RepeatedComponentError)
from arrangement_freeness.exactcore import FieldElement, MultiPoly, NumberField, builtin_field, cyclotomic_field, embedding
from arrangement_freeness.fixtures import load
from arrangement_freeness.freeness import CurveSpec, FreenessCertificate, freeness_certificate
from arrangement_freeness.pencil import (ConicLineLattice, CubicPencil, IndeterminateAt, PencilMember, RationalMap,
                                         assemble_conic_line, conic_line_lattice, conic_rank, cubics_through,
                                         degenerate_members, map_evaluate, tangent_line)
from arrangement_freeness.projgeom import ProjLine, ProjPoint, incident


def lifted_components(contents: ArrangementFile, target: NumberField) -> list[Union[ProjLine, MultiPoly]]:
    """lines and conics of a file moved into a larger field"""
    image: FieldElement = embedding(contents.field, target)
    components: list[Union[ProjLine, MultiPoly]] = [line.substitute_generator(image)  # type: ignore[misc]
                                                   for line in contents.lines]
    components.extend(conic.substitute_generator(image) for conic in contents.conics)
    return components


class TestConics(CommonTestBase):
    """ranks and tangents"""

    def setUp(self):
        """variables over Q"""
        self.q: NumberField = builtin_field('Q')
        self.x, self.y, self.z = (MultiPoly.variable(self.q, name) for name in 'xyz')

    def test_rank(self):
        """smooth, line pair, double line, zero"""
        self.assertEqual(conic_rank(self.x ** 2 - self.y * self.z), 3)
        self.assertEqual(conic_rank(self.x * self.y), 2)
        self.assertEqual(conic_rank(self.x ** 2), 1)
        self.assertEqual(conic_rank(MultiPoly(self.q)), 0)

    def test_tangent(self):
        """x^2 - yz at (0:0:1) is tangent to y = 0"""
        point: ProjPoint = ProjPoint.of(self.q, 0, 0, 1)
        self.assertEqual(tangent_line(self.x ** 2 - self.y * self.z, point), ProjLine.of(self.q, 0, 1, 0))
        line: ProjLine = ProjLine.of(self.q, 1, 0, 0)
        self.assertIs(tangent_line(line, point), line)

    def test_tangent_conics(self):
        """two conics touching at (0:1:0) and (0:0:1)"""
        with self.assertRaises(NonOrdinarySingularityError):
            conic_line_lattice([self.x ** 2 - self.y * self.z, self.x ** 2 - self.y * self.z * 2])

    def test_transversal_conics(self):
        """two conics through (+-1:+-1:1) and the line y = z through two of those points"""
        first: MultiPoly = self.x ** 2 + self.y ** 2 - self.z ** 2 * 2
        second: MultiPoly = self.x ** 2 + self.y ** 2 * 2 - self.z ** 2 * 3
        summary: ConicLineLattice = conic_line_lattice([first, second, ProjLine.of(self.q, 0, 1, -1)])
        self.assertEqual(summary.nk, {2: 2, 3: 2})
        self.assertEqual(summary.component_bezout, 8)
        self.assertEqual(summary.point_bezout, 8)
        self.assertTrue(summary.all_ordinary)

    def test_singular_component_rejected(self):
        """conic components must be smooth"""
        with self.assertRaises(DegenerateInputError):
            conic_line_lattice([self.x * self.y, ProjLine.of(self.q, 0, 0, 1)])

    def test_repeated_conic_rejected(self):
        """a conic and a multiple of it"""
        conic: MultiPoly = self.x ** 2 + self.y ** 2 - self.z ** 2
        with self.assertRaisesRegex(expected_exception=RepeatedComponentError, expected_regex='components 0 and 1'):
            conic_line_lattice([conic, conic * 2])

    def test_points_outside_the_field(self):
        """the conic-line curve needs i and sqrt(3)"""
        with self.assertRaises(NotInFieldError):
            conic_line_lattice(lifted_components(load('cl'), builtin_field('Q')))


class TestConicLineCurve(CommonTestBase):
    """the printed conic-line arrangement"""

    def test_lattice(self):
        """twelve double points and nine sextuple points"""
        summary: ConicLineLattice = conic_line_lattice(lifted_components(load('cl'), cyclotomic_field(12)))
        self.assertEqual(summary.degrees, [1] * 6 + [2] * 6)
        self.assertEqual(summary.nk, {2: 12, 6: 9})
        self.assertEqual(summary.component_bezout, 147)
        self.assertEqual(summary.point_bezout, 147)
        self.assertEqual(summary.tau(), 237)

    def test_free_with_exponents_4_13(self):
        """degree 18, tau 237"""
        contents: ArrangementFile = load('cl')
        curve: CurveSpec = contents.curve()
        self.assertEqual(curve.d, 18)
        summary: ConicLineLattice = conic_line_lattice(lifted_components(contents, cyclotomic_field(12)))
        certificate: FreenessCertificate = freeness_certificate(curve, summary)
        self.assertEqual(certificate.verdict, Verdict.FREE)
        self.assertEqual(certificate.describe(), 'Free(4,13)')
        self.assertEqual(str(certificate.resolution), '0 -> S(-30) + S(-21) -> S^3(-17) -> S')
        self.assertIsNone(certificate.terao)


class TestPencil(CommonTestBase):
    """cubics through the nine base points"""

    def test_needs_nine_points(self):
        """eight points are rejected"""
        base: ArrangementFile = load('cl_points')
        with self.assertRaises(ArrangementValueError):
            cubics_through(base.points[:8])

    def test_collinear_points_are_not_a_pencil(self):
        """nine points on a line impose only four conditions"""
        q: NumberField = builtin_field('Q')
        with self.assertRaisesRegex(expected_exception=NotAPencilError, expected_regex='dimension 6'):
            cubics_through([ProjPoint.of(q, 1, k, 0) for k in range(9)])

    def test_general_points_are_not_a_pencil(self):
        """nine random points impose nine conditions, one cubic is left"""
        q: NumberField = builtin_field('Q')
        rng: random.Random = random.Random(9)
        points: list[ProjPoint] = [ProjPoint.of(q, rng.randint(-1000, 1000), rng.randint(-1000, 1000), 1)
                                   for _ in range(9)]
        with self.assertRaisesRegex(expected_exception=NotAPencilError, expected_regex='dimension 1,') as raised:
            cubics_through(points)
        self.assertEqual(raised.exception.dim, 1)

    def test_degenerate_members(self):
        """six line-times-conic members whose union is the printed curve"""
        base: ArrangementFile = load('cl_points')
        extended: NumberField = cyclotomic_field(12)
        image: FieldElement = embedding(base.field, extended)
        pencil: CubicPencil = cubics_through([p.substitute_generator(image) for p in base.points])  # type: ignore[misc]
        for cubic in pencil.basis:
            self.assertTrue(all(cubic.evaluate(p.coords).is_zero() for p in pencil.base_points))
        members: list[PencilMember] = degenerate_members(pencil)
        self.assertEqual(len(members), 6)
        for member in members:
            self.assertEqual(member.factorization, Factorization.DEGENERATE)
            self.assertTrue(member.conic_smooth)
            self.assertEqual(sum(1 for p in pencil.base_points if incident(p, member.line)), 3)  # type: ignore[arg-type]
        curve, summary = assemble_conic_line(members)
        self.assertTrue(curve.f.is_proportional(load('cl').curve().f.lift(extended)))
        self.assertEqual(summary.nk, {2: 12, 6: 9})

    def test_line_component_short_of_base_points(self):
        """a member x*C whose line holds only two of the listed points"""
        q: NumberField = builtin_field('Q')
        x, y, z = (MultiPoly.variable(q, name) for name in 'xyz')
        pencil: CubicPencil = CubicPencil((x * (y * y + z * z - x * x), y ** 3 + z ** 3),
                                          [ProjPoint.of(q, 0, 1, 0), ProjPoint.of(q, 0, 0, 1), ProjPoint.of(q, 1, 1, 1)])
        with self.assertRaisesRegex(expected_exception=ArithmeticError, expected_regex='carries 2 base points'):
            degenerate_members(pencil)

    def test_assemble_needs_members(self):
        """nothing to assemble"""
        with self.assertRaises(ArrangementValueError):
            assemble_conic_line([])


class TestRationalMap(CommonTestBase):
    """the degree six self-map"""

    def setUp(self):
        """map over Q"""
        self.rational_map: RationalMap = RationalMap(tuple(load('rational_map').polys))  # type: ignore[arg-type]

    def test_base_points_are_indeterminate(self):
        """all nine points"""
        base: ArrangementFile = load('cl_points')
        for point in base.points:
            self.assertIsInstance(map_evaluate(self.rational_map, point), IndeterminateAt, msg=str(point))

    def test_image(self):
        """(1:1:1) goes to (1:0:0)"""
        q: NumberField = builtin_field('Q')
        self.assertEqual(map_evaluate(self.rational_map, ProjPoint.of(q, 1, 1, 1)), ProjPoint.of(q, 1, 0, 0))

    def test_unequal_degrees(self):
        """components must share a degree"""
        q: NumberField = builtin_field('Q')
        x: MultiPoly = MultiPoly.variable(q, 'x')
        with self.assertRaises(DegenerateInputError):
            RationalMap((x, x * x, x))
