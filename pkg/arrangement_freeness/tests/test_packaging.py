"""test packaging"""
from common_test_base import CommonTestBase

from arrangement_freeness import PACKAGE_NAME, __versions__
from arrangement_freeness.version import backend_versions, get_version


class TestVersion(CommonTestBase):
    """test the version handling"""
    def test_version(self):
        """test reading version from non-package"""
        version_regex: str = r'^(\d+\.)?(\d+\.)?(\*|\d+)$'  # x.y.z
        version: str = get_version(PACKAGE_NAME)
        self.assertRegex(version, version_regex)
        self.assertEqual(version, __versions__)

        # if package name doesn't match we expect a warning to be logged
        with self.assertLogs(level='WARNING'):
            get_version('bad-package-name')

    def test_backends(self):
        """flint is installed, unknown names are reported as missing"""
        versions: dict[str, str] = backend_versions()
        self.assertNotEqual(versions['python-flint'], 'missing')
        self.assertEqual(backend_versions(['no-such-distribution']), {'no-such-distribution': 'missing'})
