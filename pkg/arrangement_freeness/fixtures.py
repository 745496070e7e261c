"""shipped data files and their content manifest"""
from __future__ import annotations

import hashlib
import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Any, Optional, Union

from .codec.arrangement_file import ArrangementFile, read_arrangement_file
from .errors import ArrangementValueError, FixtureIntegrityError
from .monodromy import MonodromyTable, read_table

LOGGER: logging.Logger = logging.getLogger('arrangement-freeness')
LOGGER.addHandler(logging.NullHandler())  # in case wrapping application hasn't set a default handler

DATA_DIR: Path = Path(__file__).parent / 'data'
MANIFEST_NAME: str = 'manifest.json'


def data_path(name: str, data_dir: Optional[Path] = None) -> Path:
    """path of a shipped file, the .json suffix is optional"""
    directory: Path = data_dir or DATA_DIR
    candidate: Path = directory / name
    if not candidate.suffix:
        candidate = candidate.with_suffix('.json')
    if not candidate.is_file():
        raise ArrangementValueError(f"no fixture named {name} in {directory}")
    return candidate


def load(name: str) -> ArrangementFile:
    """parse a shipped arrangement file"""
    return read_arrangement_file(data_path(name))


def monodromy_table(name: str = 'monof3_cl.csv') -> MonodromyTable:
    """a shipped n_2(q) table"""
    return read_table(data_path(name))


@lru_cache(maxsize=1)
def published() -> dict[str, Any]:
    """the printed tables keyed by arrangement label"""
    with open(data_path('published_tables.json'), 'r', encoding='utf-8') as tables:
        return json.load(tables)


def published_nk(label: str) -> dict[int, int]:
    """printed n_k table with integer keys"""
    return {int(k): v for k, v in sorted(published()[label]["nk"].items(), key=lambda item: int(item[0]))}


def file_digest(path: Union[str, Path]) -> str:
    """sha256 of the file bytes"""
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def read_manifest(data_dir: Optional[Path] = None) -> dict[str, dict[str, str]]:
    """file name -> {sha256, source}"""
    path: Path = (data_dir or DATA_DIR) / MANIFEST_NAME
    if not path.is_file():
        return {}
    with open(path, 'r', encoding='utf-8') as manifest_file:
        return json.load(manifest_file).get("files", {})


def write_manifest(entries: dict[str, dict[str, str]], data_dir: Optional[Path] = None) -> None:
    """rewrite the manifest in sorted order"""
    path: Path = (data_dir or DATA_DIR) / MANIFEST_NAME
    with open(path, 'w', encoding='utf-8') as manifest_file:
        json.dump({"files": dict(sorted(entries.items()))}, manifest_file, indent=1, sort_keys=True)
        manifest_file.write('\n')


def verify_manifest(data_dir: Optional[Path] = None) -> dict[str, str]:
    """check every listed file against its pinned hash, returns name -> digest"""
    directory: Path = data_dir or DATA_DIR
    verified: dict[str, str] = {}
    for name, entry in sorted(read_manifest(directory).items()):
        path: Path = directory / name
        actual: str = file_digest(path) if path.is_file() else 'missing'
        expected: str = entry.get("sha256", '')
        if actual != expected:
            raise FixtureIntegrityError(name, expected, actual)
        verified[name] = actual
    LOGGER.debug(f"manifest verified: {len(verified)} files")
    return verified


def update_manifest(data_dir: Optional[Path] = None, only_missing: bool = False) -> dict[str, str]:
    """pin the hash of every data file, returns the names whose entry changed"""
    directory: Path = data_dir or DATA_DIR
    entries: dict[str, dict[str, str]] = read_manifest(directory)
    changed: dict[str, str] = {}
    for path in sorted(directory.iterdir()):
        if path.name == MANIFEST_NAME or path.suffix not in ('.json', '.csv'):
            continue
        entry: dict[str, str] = entries.setdefault(path.name, {"source": ''})
        if only_missing and entry.get("sha256"):
            continue
        digest: str = file_digest(path)
        if entry.get("sha256") != digest:
            if entry.get("sha256"):
                LOGGER.warning(f"{path.name}: pinned hash replaced")
            entry["sha256"] = digest
            changed[path.name] = digest
    if changed:
        write_manifest(entries, directory)
    return changed
