"""version of this package and of the arithmetic backends it was run with"""
import importlib.metadata
import logging
from pathlib import Path
from typing import Any, Optional, Sequence

LOGGER: logging.Logger = logging.getLogger(__name__)

PYPROJECT: Path = Path(__file__).parent.parent / "pyproject.toml"
BACKENDS: tuple[str, ...] = ('python-flint', 'py-datastruct')


def _declared(contents: Any) -> Optional[tuple[str, str]]:
    """(name, version) from [tool.poetry], falling back to [project]"""
    for table in (contents.get('tool', {}).get('poetry', {}), contents.get('project', {})):
        if 'name' in table and 'version' in table:
            return str(table['name']), str(table['version'])
    return None


def _from_source_checkout(package_name: str) -> Optional[str]:
    """version declared in the pyproject.toml of a checkout, None when not running from one"""
    if not PYPROJECT.is_file():
        return None
    try:
        from tomlkit import parse  # pylint: disable=import-outside-toplevel
    except ImportError:
        return None  # tomlkit is a test dependency only
    declared: Optional[tuple[str, str]] = _declared(parse(PYPROJECT.read_text(encoding='utf-8')))
    if declared is None:
        LOGGER.warning(f"{PYPROJECT.name} declares no name and version")
        return None
    name, version = declared
    if name != package_name:
        LOGGER.warning(f"{PYPROJECT.name} names project {name}, expected {package_name}")
    return version


def get_version(package_name: str) -> str:
    """checkout version, else installed metadata"""
    version: Optional[str] = _from_source_checkout(package_name)
    if version is not None:
        return version
    try:
        return importlib.metadata.version(package_name)
    except importlib.metadata.PackageNotFoundError:
        LOGGER.error(f"package name {package_name} not found!")
        return f'?.?.?.{package_name}'


def backend_versions(names: Sequence[str] = BACKENDS) -> dict[str, str]:
    """installed versions of the libraries that do the arithmetic and the witness encoding"""
    versions: dict[str, str] = {}
    for name in names:
        try:
            versions[name] = importlib.metadata.version(name)
        except importlib.metadata.PackageNotFoundError:
            versions[name] = 'missing'
    return versions
