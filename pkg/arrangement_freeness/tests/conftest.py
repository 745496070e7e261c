"""setup for running tests"""
from arrangement_freeness.fixtures import update_manifest

# mypy: disable-error-code="annotation-unchecked"


def pytest_sessionstart(session):  # pylint: disable=unused-argument
    """pin hashes of fixtures that are not in the manifest yet"""
    changed: dict[str, str] = update_manifest(only_missing=True)
    if changed:
        print(f"pinned {len(changed)} new fixture hashes: {sorted(changed)}")
