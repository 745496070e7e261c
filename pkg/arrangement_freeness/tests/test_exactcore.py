"""test number field and polynomial arithmetic"""
import random

from common_test_base import CommonTestBase

from arrangement_freeness.errors import (ArrangementValueError, FieldDivisionByZeroError, FieldMismatchError,
                                         InexactDivisionError, ReducibleMinpolyError)
from arrangement_freeness.exactcore import (BUILTIN_FIELDS, FieldElement, MultiPoly, NumberField, builtin_field,
                                            cyclotomic_field, element_from_json, embedding, product, resultant)
from arrangement_freeness.fixtures import load


class TestFieldArithmetic(CommonTestBase):
    """elements of Q[t]/(p)"""

    @staticmethod
    def random_element(rng: random.Random, number_field: NumberField) -> FieldElement:
        """small integer coefficients"""
        return number_field.element([rng.randint(-5, 5) for _ in range(number_field.degree)])

    def test_field_axioms(self):
        """distributivity, commutativity and inverses on 500 seeded cases per field"""
        rng: random.Random = random.Random(20240611)
        for label, number_field in BUILTIN_FIELDS.items():
            for _ in range(500):
                a, b, c = (self.random_element(rng, number_field) for _ in range(3))
                self.assertEqual((a + b) * c, a * c + b * c, msg=label)
                self.assertEqual(a * b, b * a, msg=label)
                self.assertEqual(a - a, number_field.zero, msg=label)
                if not a.is_zero():
                    self.assertTrue((a * a.inverse()).is_one(), msg=label)

    def test_eisenstein_generator(self):
        """e^2 + e + 1 = 0 and the generator text form"""
        qe: NumberField = builtin_field('Q(e)')
        e: FieldElement = qe.gen
        self.assertTrue((e * e + e + 1).is_zero())
        self.assertEqual(str(e ** 2), '-e - 1')
        self.assertEqual(qe.parse('-e - 1'), e ** 2)
        self.assertEqual(qe.parse('1/2*e+1/2') * 2, e + 1)
        self.assertEqual(e ** 3, 1)

    def test_parse_errors(self):
        """unknown symbols and empty text"""
        qr: NumberField = builtin_field('Q(r)')
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='unknown symbol'):
            qr.parse('2*e')
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='empty'):
            qr.parse('  ')

    def test_inverse_of_zero(self):
        """division by zero is an arrangement error"""
        with self.assertRaisesRegex(expected_exception=FieldDivisionByZeroError, expected_regex='inverse of zero'):
            builtin_field('Q(r)').zero.inverse()

    def test_reducible_minpoly(self):
        """a zero divisor exposes the common factor"""
        split: NumberField = NumberField('split', [-1, 0, 1])
        with self.assertRaisesRegex(expected_exception=ReducibleMinpolyError, expected_regex='reducible'):
            (split.gen - 1).inverse()

    def test_minpoly_validation(self):
        """monic of degree at least one"""
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='monic'):
            NumberField('bad', [1, 2])
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='degree >= 1'):
            NumberField('bad', [1])

    def test_field_mismatch(self):
        """elements of different fields do not combine"""
        with self.assertRaises(FieldMismatchError):
            _ = builtin_field('Q(e)').gen + builtin_field('Q(r)').gen

    def test_canonical_vectors(self):
        """the JSON vector and the generator text read to the same element"""
        qe: NumberField = builtin_field('Q(e)')
        self.assertEqual(element_from_json(qe, [[1, 2], [1, 2]]), element_from_json(qe, '1/2*e+1/2'))
        self.assertEqual(qe.gen.to_json(), [[0, 1], [1, 1]])


class TestEmbeddings(CommonTestBase):
    """generator images in cyclotomic fields"""

    def test_images_satisfy_minpolys(self):
        """each registered image is a root of the source minimal polynomial"""
        cases: list[tuple[str, int]] = [('Q(e)', 12), ('Q(sqrt3)', 12), ('Q(r)', 16), ('Q(sqrt5)', 20)]
        for label, order in cases:
            source: NumberField = builtin_field(label)
            image: FieldElement = embedding(source, cyclotomic_field(order))
            value: FieldElement = image.field.zero
            for coefficient in reversed(source.minpoly):
                value = value * image + coefficient
            self.assertTrue(value.is_zero(), msg=label)

    def test_identity_and_rational(self):
        """same field maps the generator to itself, Q embeds everywhere"""
        qe: NumberField = builtin_field('Q(e)')
        self.assertEqual(embedding(qe, qe), qe.gen)
        self.assertEqual(embedding(builtin_field('Q'), qe).field, qe)

    def test_unregistered(self):
        """no embedding of Q(e) into Q(r)"""
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='no embedding'):
            embedding(builtin_field('Q(e)'), builtin_field('Q(r)'))

    def test_lift_requires_rational_source(self):
        """only polynomials over Q lift by coefficient inclusion"""
        qe: NumberField = builtin_field('Q(e)')
        poly: MultiPoly = MultiPoly.linear_form([qe.one, qe.gen, qe.zero])
        with self.assertRaises(FieldMismatchError):
            poly.lift(cyclotomic_field(12))
        lifted: MultiPoly = poly.substitute_generator(embedding(qe, cyclotomic_field(12)))
        self.assertEqual(lifted.field, cyclotomic_field(12))


class TestMultiPoly(CommonTestBase):
    """polynomials in x, y, z"""

    def setUp(self):
        """variables over Q"""
        self.q: NumberField = builtin_field('Q')
        self.x, self.y, self.z = (MultiPoly.variable(self.q, name) for name in 'xyz')

    def test_exact_division(self):
        """(x^2 - y^2) / (x - y) = x + y"""
        self.assertEqual((self.x ** 2 - self.y ** 2).exact_divide(self.x - self.y), self.x + self.y)
        with self.assertRaises(InexactDivisionError):
            (self.x ** 2 + self.y ** 2).exact_divide(self.x - self.y)

    def test_euler_relation(self):
        """x f_x + y f_y + z f_z = d f for a product of linear forms"""
        qe: NumberField = builtin_field('Q(e)')
        forms: list[MultiPoly] = [MultiPoly.linear_form(self.elements(qe, *coeffs))
                                  for coeffs in (('1', '0', '0'), ('1', '1', 'e'), ('e', '-e - 1', '1'), ('0', '1', '1'))]
        f: MultiPoly = product(forms, qe)
        variables: list[MultiPoly] = [MultiPoly.variable(qe, name) for name in 'xyz']
        euler: MultiPoly = sum((v * p for v, p in zip(variables, f.gradient())), MultiPoly(qe))
        self.assertEqual(euler, f * 4)

    def test_euler_relation_on_shipped_curves(self):
        """line arrangements, the generic lines and the conic-line curve"""
        for name in ('hesse12', 'c8', 'generic5', 'cl'):
            curve = load(name).curve()
            variables: list[MultiPoly] = [MultiPoly.variable(curve.field, v) for v in 'xyz']
            euler: MultiPoly = sum((v * p for v, p in zip(variables, curve.f.gradient())), MultiPoly(curve.field))
            self.assertEqual(euler, curve.f * curve.d, msg=name)

    def test_resultant(self):
        """Res_y(y - x, y^2 - z^2) = x^2 - z^2"""
        self.assertEqual(resultant(self.y - self.x, self.y ** 2 - self.z ** 2, 'y'), self.x ** 2 - self.z ** 2)

    def test_resultant_sign(self):
        """Res_y(x - y, x + y) = 2x, swapping the arguments flips the sign"""
        self.assertEqual(resultant(self.x - self.y, self.x + self.y, 'y'), self.x * 2)
        self.assertEqual(resultant(self.x + self.y, self.x - self.y, 'y'), self.x * -2)
        self.assertEqual(resultant(self.x ** 2 + self.z ** 2, self.x, 'x'), self.z ** 2)
        qr: NumberField = builtin_field('Q(r)')
        x, z = MultiPoly.variable(qr, 'x'), MultiPoly.variable(qr, 'z')
        r: MultiPoly = MultiPoly.constant(qr, qr.gen)
        self.assertTrue(resultant(x ** 2 - z ** 2 * 2, x - r * z, 'x').is_zero())

    def test_restrict_to_line(self):
        """x*y on the line through (1:0:0) and (0:1:0) is s*t"""
        one, zero = self.q.one, self.q.zero
        restricted = (self.x * self.y).restrict_to_line([one, zero, zero], [zero, one, zero])
        self.assertEqual(restricted, [zero, one, zero])

    def test_proportional(self):
        """scaling keeps proportionality"""
        self.assertTrue((self.x + self.y).is_proportional((self.x + self.y) * 3))
        self.assertFalse((self.x + self.y).is_proportional(self.x - self.y))

    def test_text(self):
        """readable rendering"""
        self.assertEqual(str(self.x ** 2 - self.y * self.z), 'x^2 - y*z')
