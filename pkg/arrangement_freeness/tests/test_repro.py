"""test the end-to-end reproductions"""
from common_test_base import CommonTestBase

from arrangement_freeness.codec.definitions import Comparison
from arrangement_freeness.repro import REPRODUCTIONS, ReproOptions, ReproReport


class TestReproductions(CommonTestBase):
    """published tables against computed values"""

    def test_octagon_without_certification(self):
        """lattice and unexpected degrees from the printed exponents"""
        report: ReproReport = REPRODUCTIONS['thmB'](ReproOptions(freeness=False, rigidity=False))
        self.assertEqual(report.mismatches, [])
        self.assertEqual(report.status_of("n_k"), Comparison.MATCH)
        self.assertEqual(report.status_of("unexpected degrees"), Comparison.MATCH)
        self.assertEqual(report.details["freeness"], "skipped")
        self.assertEqual(report.details["tau"], 769)
        self.assertIn('== thmB ==', report.render())

    def test_conic_line_flags_the_printed_polynomial(self):
        """only the eigenvalues where the printed sources disagree are flagged"""
        report: ReproReport = REPRODUCTIONS['thmC'](ReproOptions(freeness=False))
        self.assertEqual(report.mismatches, [])
        flagged: list[str] = [row.item for row in report.rows if row.status == Comparison.PUBLISHED_INCONSISTENT]
        self.assertEqual(flagged, ['m(alpha_6)', 'm(alpha_12)'])
        labels: list[str] = [row["status"] for row in report.to_dict()["rows"] if row["item"] == 'm(alpha_6)']
        self.assertEqual(labels, ['PAPER-INCONSISTENT'])
        self.assertEqual(report.status_of("degenerate members"), Comparison.MATCH)
        self.assertEqual(report.details["tau"], 237)
        self.assertEqual(report.details["map(1:1:1)"], '(1:0:0)')
        self.assertEqual(report.details["euler_characteristic"], 36)
        self.assertEqual(report.details["degree_identity"]["deg_delta2"], 620)

    def test_ngons(self):
        """the decagon table double counts, the symmetry lines do not"""
        report: ReproReport = REPRODUCTIONS['remark-ngons'](ReproOptions(freeness=False))
        self.assertEqual(report.status_of("O61 n_k"), Comparison.PUBLISHED_INCONSISTENT)
        self.assertEqual(report.status_of("C10 sides, symmetry lines and line at infinity"), Comparison.MATCH)
        self.assertEqual(report.status_of("C12 sides, symmetry lines and line at infinity"), Comparison.MATCH)
        self.assertIsNone(report.status_of("O61 verdict"))

    def test_table_cells_order_n_k_numerically(self):
        """text keys of n_k tables render in integer order"""
        report: ReproReport = ReproReport("cells")
        report.compare("n_k", {"2": 335, "15": 5, "10": 1, "3": 140}, {"10": 1, "2": 335, "3": 140, "15": 5})
        self.assertIn('{"2": 335, "3": 140, "10": 1, "15": 5}  {"2": 335, "3": 140, "10": 1, "15": 5}  MATCH',
                      report.render())

    def test_hesse_full(self):
        """57 lines certified exactly"""
        self.require_full_repro()
        report: ReproReport = REPRODUCTIONS['thmA'](None)
        self.assertEqual(report.mismatches, [])
        self.assertEqual(report.status_of("exponents"), Comparison.MATCH)
        self.assertEqual(report.status_of("rigid"), Comparison.MATCH)
