"""test exceptions carry their details"""
from common_test_base import CommonTestBase

from arrangement_freeness.errors import (ArrangementError, ArrangementValueError, DegenerateInputError,
                                         FieldMismatchError, FixtureIntegrityError, InexactDivisionError,
                                         NoGoodPrimeError, NonOrdinarySingularityError, NotInFieldError,
                                         RepeatedComponentError, UnsupportedNError)
from arrangement_freeness.exactcore import builtin_field
from arrangement_freeness.linalg import good_primes


class TestExceptions(CommonTestBase):
    """machine-readable error forms"""

    def test_as_dict(self):
        """code and detail"""
        err: ArrangementError = FieldMismatchError('Q(e)', 'Q(r)')
        self.assertEqual(err.as_dict(), {"error": "FieldMismatch", "detail": "field mismatch, Q(e) vs Q(r)"})
        self.assertEqual(UnsupportedNError(7, (8, 10, 12)).as_dict()["error"], "UnsupportedN")
        self.assertEqual(RepeatedComponentError(1, 4).as_dict()["detail"], "components 1 and 4 are proportional")

    def test_aggregated_details(self):
        """keyword details appear in the message"""
        err: NotInFieldError = NotInFieldError(pair=(2, 7), factor='X^2 + 1', label='Q')
        self.assertEqual(err.pair, (2, 7))
        self.assertIn('X^2 + 1', str(err))
        self.assertIn('remainder 1', str(InexactDivisionError(dividend='x', divisor='y', remainder='1')))
        self.assertIn('components (0, 3)', str(NonOrdinarySingularityError('(0:0:1)', (0, 3))))
        self.assertIn('missing', str(FixtureIntegrityError('c8.json', 'abc', 'missing')))

    def test_hierarchy(self):
        """value errors stay ValueError, computational ones share a base"""
        self.assertTrue(issubclass(ArrangementValueError, ValueError))
        self.assertFalse(issubclass(ArrangementValueError, ArrangementError))
        self.assertTrue(issubclass(NoGoodPrimeError, ArrangementError))
        self.assertTrue(issubclass(DegenerateInputError, ArrangementError))
        self.assertEqual(DegenerateInputError(what="component 2", reason="not a smooth conic").as_dict(),
                         {"error": "DegenerateInput", "detail": "component 2: not a smooth conic"})

    def test_no_good_prime(self):
        """a ceiling below the search floor leaves no candidates"""
        with self.assertRaisesRegex(expected_exception=NoGoodPrimeError, expected_regex='fewer than 3'):
            good_primes(builtin_field('Q(e)'), 3, 1000)
