"""test the arrangement file format and the witness records"""
import json
import os
import tempfile
from fractions import Fraction

from common_test_base import CommonTestBase

from arrangement_freeness.arrangement import gen_hesse
from arrangement_freeness.codec.arrangement_file import (ArrangementFile, dumps, loads, read_arrangement_file,
                                                         write_arrangement_file)
from arrangement_freeness.codec.definitions import WITNESS_FORMAT_VERSION, WITNESS_MAGIC, Comparison, ExitCode
from arrangement_freeness.codec.packets import (SignedInteger, WitnessHeader, encode_rational, encode_witness,
                                                read_witness_header, witness_digest)
from arrangement_freeness.errors import ArrangementValueError
from arrangement_freeness.exactcore import MultiPoly, NumberField, builtin_field
from arrangement_freeness.fixtures import load


class TestArrangementFile(CommonTestBase):
    """JSON documents"""

    def test_generator_text_and_vectors(self):
        """both element encodings read to the same lines"""
        text: str = json.dumps({"field": "Q(e)", "lines": [["1", "e", "-e-1"], [[[1, 1], [0, 1]], [[0, 1], [1, 1]],
                                                                               [[-1, 1], [-1, 1]]]]})
        contents: ArrangementFile = loads(text)
        self.assertEqual(len(contents.arrangement()), 1)
        self.assertEqual(len(contents.arrangement().dropped_duplicates), 1)

    def test_canonical_text(self):
        """written files read back to the same arrangement with the metadata kept"""
        contents: ArrangementFile = ArrangementFile.of(gen_hesse(), source='test')
        with tempfile.TemporaryDirectory() as directory:
            path: str = os.path.join(directory, 'hesse.json')
            write_arrangement_file(path, contents)
            again: ArrangementFile = read_arrangement_file(path)
            with open(path, 'r', encoding='utf-8') as written:
                self.assertEqual(written.read(), dumps(again))
        self.assertEqual(again.arrangement().as_set(), gen_hesse().as_set())
        self.assertEqual(again.metadata, {"label": 'H', "source": 'test'})
        self.assertIs(again.field, builtin_field('Q(e)'))

    def test_conics_and_polys(self):
        """the printed conic-line curve and the sextic map"""
        curve: ArrangementFile = load('cl')
        self.assertEqual((len(curve.lines), len(curve.conics)), (6, 6))
        self.assertEqual(len(loads(dumps(curve)).conics), 6)
        self.assertEqual(curve.curve().d, 18)
        self.assertEqual([poly.degree for poly in load('rational_map').polys], [6, 6, 6])

    def test_custom_field(self):
        """a field given by its minimal polynomial"""
        contents: ArrangementFile = loads(json.dumps({
            "field": {"label": "Q(w)", "symbol": "w", "minpoly": [[-7, 1], [0, 1], [1, 1]]},
            "points": [["1", "w", "0"]]}))
        self.assertEqual(contents.field.degree, 2)
        self.assertTrue((contents.field.gen ** 2 - 7).is_zero())
        self.assertEqual(str(contents.points[0]), '(1:w:0)')

    def test_malformed(self):
        """bad JSON, wrong shapes and missing entries"""
        for text, regex in (('{', 'not JSON'), ('[]', 'JSON object'), ('{}', "no 'field'"),
                            ('{"field": "Q", "lines": [["1", "0"]]}', 'needs 3 coordinates'),
                            ('{"field": "Q", "conics": [["1", "0", "0"]]}', 'conic needs 6')):
            with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex=regex, msg=text):
                loads(text)


class TestWitnessRecords(CommonTestBase):
    """binary encoding hashed into certificate digests"""

    def test_header(self):
        """fixed 12 byte header"""
        self.assertEqual(WitnessHeader.packet_size(), 12)
        header: WitnessHeader = WitnessHeader(degree=4, field_degree=2, term_count=9)
        data: bytes = header.pack()
        self.assertEqual(len(data), 12)
        self.assertEqual(data[:4], bytes([0x53, 0x59, 0x00, 0x01]))
        decoded: WitnessHeader = WitnessHeader.new(data)
        self.assertEqual((decoded.magic, decoded.version, decoded.degree), (WITNESS_MAGIC, WITNESS_FORMAT_VERSION, 4))

    def test_signed_integers(self):
        """arbitrary precision, two's complement"""
        self.assertEqual(SignedInteger.of(-1).pack(), b'\x00\x01\xff')
        self.assertEqual(SignedInteger.of(128).pack(), b'\x00\x02\x00\x80')
        big: int = -(2 ** 70) + 3
        self.assertEqual(SignedInteger.new(SignedInteger.of(big).pack()).value, big)
        self.assertEqual(encode_rational(Fraction(-1, 2)), b'\x00\x01\xff\x00\x01\x02')

    def test_digest_depends_on_coefficients(self):
        """scaling the triple changes the digest"""
        q: NumberField = builtin_field('Q')
        x, y, z = (MultiPoly.variable(q, name) for name in 'xyz')
        triple: list[MultiPoly] = [x, y, z]
        self.assertEqual(len(encode_witness(1, triple)), 12 + 3 * (7 + 6))
        self.assertNotEqual(witness_digest(1, triple), witness_digest(1, [x * 2, y * 2, z * 2]))
        self.assertEqual(witness_digest(1, triple), witness_digest(1, [x, y, z]))

    def test_read_header(self):
        """the header of an encoding, truncated and foreign records"""
        q: NumberField = builtin_field('Q')
        x, y, z = (MultiPoly.variable(q, name) for name in 'xyz')
        header: WitnessHeader = read_witness_header(encode_witness(1, [x, y * 3, z - x]))
        self.assertEqual((header.degree, header.field_degree, header.term_count), (1, 1, 4))
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='12 header bytes'):
            read_witness_header(b'\x53\x59')
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='not a witness record'):
            read_witness_header(bytes(12))


class TestDefinitions(CommonTestBase):
    """report labels and exit codes"""

    def test_labels(self):
        """comparison text and process exit codes"""
        self.assertEqual(str(Comparison.PUBLISHED_INCONSISTENT), 'PAPER-INCONSISTENT')
        self.assertEqual([int(code) for code in ExitCode], [0, 1, 2])
