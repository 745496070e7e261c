"""test modular probes and exact kernels"""
from common_test_base import CommonTestBase

from arrangement_freeness.exactcore import FieldElement, NumberField, builtin_field
from arrangement_freeness.linalg import PRIME_FLOOR, GoodPrime, KernelResult, SparseMatrix, good_primes


class TestGoodPrimes(CommonTestBase):
    """reduction maps K -> F_p"""

    def test_roots_of_minpoly(self):
        """the generator image is a root of the minimal polynomial modulo p"""
        for label in ('Q(e)', 'Q(r)', 'Q(z12)'):
            number_field: NumberField = builtin_field(label)
            primes: tuple[GoodPrime, ...] = good_primes(number_field)
            self.assertEqual(len(primes), 3)
            for prime in primes:
                self.assertGreaterEqual(prime.prime, PRIME_FLOOR)
                value: int = 0
                for coefficient in reversed(number_field.minpoly):
                    value = (value * prime.root + int(coefficient)) % prime.prime
                self.assertEqual(value, 0, msg=label)

    def test_image_is_a_ring_map(self):
        """images of a product multiply"""
        qe: NumberField = builtin_field('Q(e)')
        prime: GoodPrime = good_primes(qe)[0]
        a, b = qe.parse('2*e + 3'), qe.parse('1/3*e - 1')
        self.assertEqual(prime.image(a * b), prime.image(a) * prime.image(b) % prime.prime)


class TestSparseMatrix(CommonTestBase):
    """kernels over number fields"""

    def test_kernel_over_eisenstein_field(self):
        """[1 e] has the kernel spanned by (-e, 1)"""
        qe: NumberField = builtin_field('Q(e)')
        matrix: SparseMatrix = SparseMatrix(qe, 1, 2)
        matrix.set(0, 0, qe.one)
        matrix.set(0, 1, qe.gen)
        kernel: KernelResult = matrix.exact_kernel(good_primes(qe))
        self.assertEqual(kernel.dimension, 1)
        self.assertEqual(kernel.rank, 1)
        self.assertEqual(kernel.vectors[0], [-qe.gen, qe.one])

    def test_full_rank(self):
        """an invertible matrix has no kernel"""
        qr: NumberField = builtin_field('Q(r)')
        matrix: SparseMatrix = SparseMatrix(qr, 2, 2)
        for row, column, text in ((0, 0, 'r'), (0, 1, '1'), (1, 0, '1'), (1, 1, 'r')):
            matrix.set(row, column, qr.parse(text))
        self.assertEqual(matrix.exact_kernel(good_primes(qr)).dimension, 0)
        self.assertEqual(matrix.rank_mod(good_primes(qr)[0]), 2)

    def test_rank_deficient(self):
        """second row is r times the first"""
        qr: NumberField = builtin_field('Q(r)')
        matrix: SparseMatrix = SparseMatrix(qr, 2, 3)
        first: list[FieldElement] = self.elements(qr, '1', 'r', '3')
        for column, value in enumerate(first):
            matrix.set(0, column, value)
            matrix.set(1, column, value * qr.gen)
        kernel: KernelResult = matrix.exact_kernel(good_primes(qr))
        self.assertEqual(kernel.dimension, 2)
        self.assertTrue(all(matrix.annihilates(vector) for vector in kernel.vectors))

    def test_empty_rows(self):
        """no equations leaves the whole space"""
        q: NumberField = builtin_field('Q')
        self.assertEqual(SparseMatrix(q, 0, 4).exact_kernel(good_primes(q)).dimension, 4)

    def test_add_cancels(self):
        """accumulated entries that cancel are dropped"""
        q: NumberField = builtin_field('Q')
        matrix: SparseMatrix = SparseMatrix(q, 1, 1)
        matrix.add(0, 0, q.one)
        matrix.add(0, 0, -q.one)
        self.assertEqual(matrix.columns[0], {})
