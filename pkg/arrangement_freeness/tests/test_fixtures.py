"""test shipped data files and the manifest"""
import shutil
import tempfile
from pathlib import Path

from common_test_base import CommonTestBase

from arrangement_freeness.errors import ArrangementValueError, FixtureIntegrityError
from arrangement_freeness.fixtures import (DATA_DIR, MANIFEST_NAME, data_path, file_digest, load, published,
                                           published_nk, read_manifest, update_manifest, verify_manifest)


class TestManifest(CommonTestBase):
    """pinned hashes"""

    def setUp(self):
        """a scratch copy of the data directory"""
        self.scratch: Path = Path(tempfile.mkdtemp())
        self.data_dir: Path = self.scratch / 'data'
        shutil.copytree(DATA_DIR, self.data_dir)

    def tearDown(self):
        """remove the scratch copy"""
        shutil.rmtree(self.scratch, ignore_errors=True)

    def test_shipped_files_verify(self):
        """every data file is pinned and matches"""
        verified: dict[str, str] = verify_manifest()
        self.assertIn('hesse12.json', verified)
        self.assertIn('monof3_cl.csv', verified)
        self.assertEqual(verified['o33.json'], file_digest(data_path('o33')))
        self.assertNotIn(MANIFEST_NAME, verified)

    def test_tampered_file(self):
        """one changed byte fails verification"""
        target: Path = self.data_dir / 'generic5.json'
        target.write_text(target.read_text(encoding='utf-8').replace('"3"', '"4"'), encoding='utf-8')
        with self.assertRaisesRegex(expected_exception=FixtureIntegrityError, expected_regex='generic5.json'):
            verify_manifest(self.data_dir)

    def test_missing_file(self):
        """a pinned file that disappeared"""
        (self.data_dir / 'c8.json').unlink()
        with self.assertRaisesRegex(expected_exception=FixtureIntegrityError, expected_regex='missing'):
            verify_manifest(self.data_dir)

    def test_update_repins(self):
        """update replaces the stale hash with a warning and keeps the source text"""
        target: Path = self.data_dir / 'generic5.json'
        target.write_text(target.read_text(encoding='utf-8') + '\n', encoding='utf-8')
        self.assertEqual(update_manifest(self.data_dir, only_missing=True), {})
        with self.assertLogs('arrangement-freeness', level='WARNING'):
            changed: dict[str, str] = update_manifest(self.data_dir)
        self.assertEqual(list(changed), ['generic5.json'])
        self.assertEqual(read_manifest(self.data_dir)['generic5.json']['source'], 'five generic lines')
        self.assertIn('generic5.json', verify_manifest(self.data_dir))

    def test_new_file_is_pinned(self):
        """only_missing pins files the manifest does not know"""
        (self.data_dir / 'extra.csv').write_text('q,n2\n3,0\n', encoding='utf-8')
        changed: dict[str, str] = update_manifest(self.data_dir, only_missing=True)
        self.assertEqual(list(changed), ['extra.csv'])
        self.assertEqual(read_manifest(self.data_dir)['extra.csv']['source'], '')


class TestPublished(CommonTestBase):
    """printed tables"""

    def test_nk_keys_are_integers(self):
        """sorted integer keys"""
        self.assertEqual(published_nk('H57'), {2: 252, 3: 108, 4: 72, 8: 21})
        self.assertEqual(list(published_nk('O49')), [2, 3, 4, 5, 6, 7, 12])
        self.assertEqual(published()["CL"]["degenerate_members"], 6)

    def test_unknown_fixture(self):
        """a name that is not shipped"""
        with self.assertRaisesRegex(expected_exception=ArrangementValueError, expected_regex='no fixture'):
            load('nonexistent')

    def test_sizes(self):
        """line and point counts of the shipped files"""
        self.assertEqual(len(load('h57').lines), 57)
        self.assertEqual(len(load('o33').lines), 33)
        self.assertEqual(len(load('cl_points').points), 9)
