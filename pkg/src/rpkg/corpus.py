"""Corpus ingestion: package trees, manifests, and the hardware vocabulary.

A corpus is either a directory tree of packages (each package directory holds
a package.xml) or a line-delimited JSON manifest with one package per line.
All loaders produce canonical, deterministic records sorted by package name.
"""

from __future__ import annotations

import json
import logging
import os
import xml.etree.ElementTree as ET
from dataclasses import dataclass, field

from rpkg.errors import IngestionError, VocabularyError

log = logging.getLogger(__name__)

HARDWARE_KINDS = ("robot", "sensor")


@dataclass(frozen=True)
class PackageRecord:
    """One raw ingested package."""

    name: str
    description: str = ""
    files: frozenset[str] = field(default_factory=frozenset)
    cmake_text: str = ""
    source_url: str | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise IngestionError("package name must be non-empty")
        for path in self.files:
            if path.startswith("/") or ".." in path.split("/"):
                raise IngestionError(
                    f"package {self.name!r}: illegal file path {path!r}"
                )

    def to_json(self) -> dict:
        obj = {
            "name": self.name,
            "description": self.description,
            "files": sorted(self.files),
            "cmake_text": self.cmake_text,
            "source_url": self.source_url,
        }
        return obj

    @classmethod
    def from_json(cls, obj: dict) -> "PackageRecord":
        return cls(
            name=obj["name"],
            description=obj.get("description", ""),
            files=frozenset(obj.get("files", [])),
            cmake_text=obj.get("cmake_text", ""),
            source_url=obj.get("source_url"),
        )


@dataclass(frozen=True)
class VocabularyEntry:
    canonical_name: str
    kind: str
    aliases: frozenset[str]
    description: str | None = None
    tags: tuple[str, ...] = ()


@dataclass(frozen=True)
class HardwareVocabulary:
    """Known robots and sensors, with aliases used for fuzzy matching."""

    entries: tuple[VocabularyEntry, ...]

    def by_kind(self, kind: str) -> list[VocabularyEntry]:
        return [e for e in self.entries if e.kind == kind]


def collapse_whitespace(text: str) -> str:
    return " ".join(text.split())


def parse_package_xml(text: str) -> tuple[str, str]:
    """Extract (name, description) from a package.xml document.

    Only the first name and description elements are consumed; whitespace in
    the description is collapsed to single spaces.
    """
    try:
        root = ET.fromstring(text)
    except ET.ParseError as exc:
        raise IngestionError(f"malformed package.xml: {exc}") from exc
    name_el = next(root.iter("name"), None)
    if name_el is None or not (name_el.text or "").strip():
        raise IngestionError("package.xml has no name element")
    desc_el = next(root.iter("description"), None)
    description = collapse_whitespace(desc_el.text or "") if desc_el is not None else ""
    return (name_el.text or "").strip(), description


def scan_tree(root: str) -> list[PackageRecord]:
    """Ingest every package directory below *root*.

    A package directory is any directory containing a package.xml; nested
    package.xml files below a package directory are treated as part of that
    package's file listing. Records are sorted by package name.
    """
    if not os.path.isdir(root):
        raise IngestionError(f"corpus root not readable: {root}")
    records = []
    for dirpath, dirnames, filenames in os.walk(root):
        if "package.xml" not in filenames:
            continue
        dirnames[:] = []  # do not look for packages inside a package
        record = _ingest_package_dir(dirpath)
        if record is not None:
            records.append(record)
    records.sort(key=lambda r: r.name)
    return records


def _ingest_package_dir(pkg_dir: str) -> PackageRecord | None:
    xml_path = os.path.join(pkg_dir, "package.xml")
    name = os.path.basename(pkg_dir)
    description = ""
    try:
        with open(xml_path, encoding="utf-8") as fh:
            text = fh.read()
        root = ET.fromstring(text)
    except (OSError, ET.ParseError) as exc:
        log.warning("skipping %s: malformed package.xml (%s)", pkg_dir, exc)
        return None
    name_el = next(root.iter("name"), None)
    if name_el is not None and (name_el.text or "").strip():
        name = (name_el.text or "").strip()
    desc_el = next(root.iter("description"), None)
    if desc_el is not None:
        description = collapse_whitespace(desc_el.text or "")

    files = []
    for dirpath, _dirnames, filenames in os.walk(pkg_dir):
        for fn in filenames:
            rel = os.path.relpath(os.path.join(dirpath, fn), pkg_dir)
            files.append(rel.replace(os.sep, "/"))

    cmake_text = ""
    cmake_path = os.path.join(pkg_dir, "CMakeLists.txt")
    if os.path.isfile(cmake_path):
        with open(cmake_path, encoding="utf-8") as fh:
            cmake_text = fh.read()

    return PackageRecord(
        name=name,
        description=description,
        files=frozenset(files),
        cmake_text=cmake_text,
    )


def load_manifest(path: str) -> list[PackageRecord]:
    """Load a line-delimited JSON manifest, one package per line."""
    records = []
    seen: dict[str, int] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise IngestionError(f"manifest not readable: {path}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise IngestionError(f"line {lineno}: invalid JSON ({exc})") from exc
            if not isinstance(obj, dict) or not obj.get("name"):
                raise IngestionError(f"line {lineno}: missing name")
            name = obj["name"]
            if name in seen:
                raise IngestionError(
                    f"line {lineno}: duplicate package name {name!r} "
                    f"(first seen on line {seen[name]})"
                )
            seen[name] = lineno
            records.append(PackageRecord.from_json(obj))
    return records


def save_manifest(records: list[PackageRecord], path: str) -> None:
    """Write records as a line-delimited JSON manifest (load_manifest inverse)."""
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record.to_json(), sort_keys=True))
            fh.write("\n")


def load_vocabulary(path: str) -> HardwareVocabulary:
    """Load the hardware vocabulary (line-delimited JSON).

    Canonical names must be unique per kind (case-insensitive); every alias
    set gains the canonical name itself.
    """
    entries = []
    seen: set[tuple[str, str]] = set()
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise VocabularyError(f"vocabulary not found: {path}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise VocabularyError(f"line {lineno}: invalid JSON ({exc})") from exc
            name = obj.get("name")
            kind = obj.get("kind")
            if not name:
                raise VocabularyError(f"line {lineno}: missing name")
            if kind not in HARDWARE_KINDS:
                raise VocabularyError(f"line {lineno}: unknown kind {kind!r}")
            key = (kind, name.lower())
            if key in seen:
                raise VocabularyError(
                    f"line {lineno}: duplicate {kind} name {name!r}"
                )
            seen.add(key)
            aliases = obj.get("aliases", [])
            if any(not a for a in aliases):
                raise VocabularyError(f"line {lineno}: empty alias for {name!r}")
            entries.append(
                VocabularyEntry(
                    canonical_name=name,
                    kind=kind,
                    aliases=frozenset(aliases) | {name},
                    description=obj.get("description"),
                    tags=tuple(obj.get("tags", [])),
                )
            )
    return HardwareVocabulary(entries=tuple(entries))
