"""Feature extraction: one PackageRecord in, one PackageFeatures out.

Three extractors feed the feature bundle: filesystem rules (category and code
file names), fuzzy matching of the package-name prefix against the hardware
vocabulary, and phrase extraction over the tagged description sentences.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field

from rpkg.corpus import HardwareVocabulary, PackageRecord
from rpkg.fuzzy import similarity_ratio
from rpkg.phrases import extract_phrases
from rpkg.postag import Tagger, pos_tag

HARDWARE_THRESHOLD = 90


class Category(str, enum.Enum):
    META = "meta"
    DESCRIPTION = "description"
    MESSAGE = "message"
    FUNCTION = "function"

    @property
    def label(self) -> str:
        """Query-facing form, e.g. "meta package"."""
        return f"{self.value} package"


@dataclass(frozen=True)
class CodeFeatures:
    nodes: frozenset[str] = frozenset()
    services: frozenset[str] = frozenset()
    messages: frozenset[str] = frozenset()
    actions: frozenset[str] = frozenset()
    launches: frozenset[str] = frozenset()


@dataclass(frozen=True)
class HardwareMatch:
    canonical_name: str
    kind: str
    score: int

    def __post_init__(self) -> None:
        if self.score < HARDWARE_THRESHOLD:
            raise ValueError(f"hardware match below threshold: {self.score}")


@dataclass(frozen=True)
class PackageFeatures:
    """Ten-dimension feature bundle for one package."""

    package: str
    robots: frozenset[str] = frozenset()
    sensors: frozenset[str] = frozenset()
    category: Category = Category.FUNCTION
    functions: frozenset[str] = frozenset()
    characteristics: frozenset[str] = frozenset()
    nodes: frozenset[str] = frozenset()
    services: frozenset[str] = frozenset()
    messages: frozenset[str] = frozenset()
    actions: frozenset[str] = frozenset()
    launches: frozenset[str] = frozenset()

    def to_json(self) -> dict:
        return {
            "package": self.package,
            "robots": sorted(self.robots),
            "sensors": sorted(self.sensors),
            "category": self.category.value,
            "functions": sorted(self.functions),
            "characteristics": sorted(self.characteristics),
            "nodes": sorted(self.nodes),
            "services": sorted(self.services),
            "messages": sorted(self.messages),
            "actions": sorted(self.actions),
            "launches": sorted(self.launches),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PackageFeatures":
        return cls(
            package=obj["package"],
            robots=frozenset(obj.get("robots", [])),
            sensors=frozenset(obj.get("sensors", [])),
            category=Category(obj.get("category", "function")),
            functions=frozenset(obj.get("functions", [])),
            characteristics=frozenset(obj.get("characteristics", [])),
            nodes=frozenset(obj.get("nodes", [])),
            services=frozenset(obj.get("services", [])),
            messages=frozenset(obj.get("messages", [])),
            actions=frozenset(obj.get("actions", [])),
            launches=frozenset(obj.get("launches", [])),
        )


_BASIC_FILES = {"package.xml", "CMakeLists.txt"}


def _dir_segments(path: str) -> list[str]:
    return path.split("/")[:-1]


def classify_category(files: frozenset[str] | set[str]) -> Category:
    """Filesystem rules, evaluated in order; first match wins."""
    if all(f in _BASIC_FILES for f in files):
        return Category.META
    for path in files:
        segments = _dir_segments(path)
        if "meshes" in segments or "robots" in segments:
            return Category.DESCRIPTION
    for path in files:
        if "msg" in _dir_segments(path):
            return Category.MESSAGE
    return Category.FUNCTION


def _basename_no_ext(path: str) -> str:
    base = path.rsplit("/", 1)[-1]
    return base.rsplit(".", 1)[0]


def extract_code_features(files: frozenset[str] | set[str]) -> CodeFeatures:
    """Code file names by directory segment and extension."""
    nodes, services, messages, actions, launches = set(), set(), set(), set(), set()
    for path in files:
        segments = _dir_segments(path)
        if path.endswith(".py") and "scripts" in segments:
            nodes.add(_basename_no_ext(path))
        elif path.endswith(".srv") and "srv" in segments:
            services.add(_basename_no_ext(path))
        elif path.endswith(".msg") and "msg" in segments:
            messages.add(_basename_no_ext(path))
        elif path.endswith(".action") and "action" in segments:
            actions.add(_basename_no_ext(path))
        if path.endswith(".launch"):
            launches.add(_basename_no_ext(path))
    return CodeFeatures(
        nodes=frozenset(nodes),
        services=frozenset(services),
        messages=frozenset(messages),
        actions=frozenset(actions),
        launches=frozenset(launches),
    )


_ADD_EXECUTABLE = re.compile(r"add_executable\s*\(\s*([^\s()]+)", re.IGNORECASE)
_UNRESOLVED_VAR = re.compile(r"\$\{[^}]*\}")


def extract_nodes_from_cmake(cmake_text: str, package_name: str) -> frozenset[str]:
    """First arguments of add_executable(...) calls.

    ${PROJECT_NAME} resolves to the package name; targets with any other
    unresolved ${...} reference are skipped.
    """
    nodes = set()
    for match in _ADD_EXECUTABLE.finditer(cmake_text):
        target = match.group(1).replace("${PROJECT_NAME}", package_name)
        if _UNRESOLVED_VAR.search(target) or not target:
            continue
        nodes.add(target)
    return frozenset(nodes)


def match_hardware(
    package_name: str, vocab: HardwareVocabulary
) -> HardwareMatch | None:
    """Fuzzy-match the package-name prefix against the hardware vocabulary.

    The first token (before the first "_") is scored against every alias;
    matches below the threshold of 90 are never emitted. Ties prefer robots
    over sensors, then the lexicographically smaller canonical name.
    """
    first = package_name.split("_", 1)[0]
    best: tuple[int, int, str, HardwareMatch] | None = None
    for entry in vocab.entries:
        for alias in entry.aliases:
            score = similarity_ratio(first, alias)
            if score < HARDWARE_THRESHOLD:
                continue
            rank = (-score, 0 if entry.kind == "robot" else 1, entry.canonical_name.lower())
            candidate = HardwareMatch(entry.canonical_name, entry.kind, score)
            if best is None or rank < (best[0], best[1], best[2]):
                best = (*rank, candidate)
    return best[3] if best else None


_SENTENCE_SPLIT = re.compile(r"[.!?]")


def split_sentences(text: str) -> list[str]:
    return [s.strip() for s in _SENTENCE_SPLIT.split(text) if s.strip()]


def extract_all(
    record: PackageRecord,
    vocab: HardwareVocabulary,
    tagger: Tagger | None = None,
) -> PackageFeatures:
    """Compose every extractor into the full feature bundle."""
    category = classify_category(record.files)
    code = extract_code_features(record.files)
    nodes = code.nodes | extract_nodes_from_cmake(record.cmake_text, record.name)

    robots: set[str] = set()
    sensors: set[str] = set()
    match = match_hardware(record.name, vocab)
    if match is not None:
        (robots if match.kind == "robot" else sensors).add(match.canonical_name)

    functions: set[str] = set()
    characteristics: set[str] = set()
    for sentence in split_sentences(record.description):
        fns, chars = extract_phrases(pos_tag(sentence, tagger))
        functions.update(f.strip() for f in fns if f.strip())
        characteristics.update(c.strip() for c in chars if c.strip())

    return PackageFeatures(
        package=record.name,
        robots=frozenset(robots),
        sensors=frozenset(sensors),
        category=category,
        functions=frozenset(functions),
        characteristics=frozenset(characteristics),
        nodes=frozenset(nodes),
        services=code.services,
        messages=code.messages,
        actions=code.actions,
        launches=code.launches,
    )
