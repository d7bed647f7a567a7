"""The package knowledge graph: typed entities, typed relations, persistence.

Eleven entity types and nine relation kinds. Named features (robot, sensor,
category, function, characteristic) are deduplicated case-insensitively and
shared between packages; code-file features (action, node, service, message,
launch) get a fresh entity per package because equal names may refer to
different file contents. The graph is write-once: built, then frozen.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field

from rpkg.errors import GraphError, PackageNotFoundError
from rpkg.extraction import Category, PackageFeatures

FORMAT_NAME = "rpkg-graph"
FORMAT_VERSION = 1

ENTITY_TYPES = (
    "Package", "Robot", "Sensor", "Category", "Function", "Characteristic",
    "Action", "Node", "Service", "Message", "Launch",
)

RELATION_KINDS = (
    "is_for_device", "is_in_category", "has_function", "has_characteristics",
    "includes_action", "includes_node", "includes_service",
    "includes_message", "includes_launch",
)

# (feature field, relation kind, entity type, deduplicated?)
_DIMENSION_LINKS = (
    ("robots", "is_for_device", "Robot", True),
    ("sensors", "is_for_device", "Sensor", True),
    ("category", "is_in_category", "Category", True),
    ("functions", "has_function", "Function", True),
    ("characteristics", "has_characteristics", "Characteristic", True),
    ("actions", "includes_action", "Action", False),
    ("nodes", "includes_node", "Node", False),
    ("services", "includes_service", "Service", False),
    ("messages", "includes_message", "Message", False),
    ("launches", "includes_launch", "Launch", False),
)

_REL_TARGETS = {
    "is_for_device": {"Robot", "Sensor"},
    "is_in_category": {"Category"},
    "has_function": {"Function"},
    "has_characteristics": {"Characteristic"},
    "includes_action": {"Action"},
    "includes_node": {"Node"},
    "includes_service": {"Service"},
    "includes_message": {"Message"},
    "includes_launch": {"Launch"},
}


@dataclass(frozen=True)
class Entity:
    id: int
    type: str
    name: str
    attrs: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class Relation:
    src: int
    rel: str
    dst: int


class GraphBuilder:
    """Single-writer accumulator; freeze() produces the immutable Graph."""

    def __init__(self) -> None:
        self._entities: dict[int, Entity] = {}
        self._relations: list[Relation] = []
        self._relation_set: set[tuple[int, str, int]] = set()
        self._dedup: dict[tuple[str, str], int] = {}
        self._packages: dict[str, int] = {}
        self._next_id = 1

    def _new_entity(self, type_: str, name: str) -> int:
        eid = self._next_id
        self._next_id += 1
        self._entities[eid] = Entity(id=eid, type=type_, name=name)
        return eid

    def _named_entity(self, type_: str, name: str) -> int:
        key = (type_, name.lower())
        eid = self._dedup.get(key)
        if eid is None:
            eid = self._new_entity(type_, name)
            self._dedup[key] = eid
        return eid

    def _add_relation(self, src: int, rel: str, dst: int) -> None:
        triple = (src, rel, dst)
        if triple in self._relation_set:
            return
        self._relation_set.add(triple)
        self._relations.append(Relation(src, rel, dst))

    def link_features(self, features: PackageFeatures) -> None:
        if features.package in self._packages:
            raise GraphError(f"duplicate package name: {features.package}")
        pkg_id = self._new_entity("Package", features.package)
        self._packages[features.package] = pkg_id
        for attr, rel, type_, dedup in _DIMENSION_LINKS:
            value = getattr(features, attr)
            names = [value.value] if attr == "category" else sorted(value)
            for name in names:
                if dedup:
                    dst = self._named_entity(type_, name)
                else:
                    dst = self._new_entity(type_, name)
                self._add_relation(pkg_id, rel, dst)

    def freeze(self) -> "Graph":
        return Graph(
            entities=dict(self._entities),
            relations=list(self._relations),
        )


@dataclass
class Graph:
    """Immutable after construction; safe for concurrent readers."""

    entities: dict[int, Entity]
    relations: list[Relation]
    index: dict[str, PackageFeatures] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        self._validate()
        self.index = self._build_index()

    def _validate(self) -> None:
        for entity in self.entities.values():
            if entity.type not in ENTITY_TYPES:
                raise GraphError(f"unknown entity type: {entity.type}")
        for relation in self.relations:
            if relation.rel not in RELATION_KINDS:
                raise GraphError(f"unknown relation kind: {relation.rel}")
            src = self.entities.get(relation.src)
            dst = self.entities.get(relation.dst)
            if src is None or dst is None:
                raise GraphError(
                    f"dangling relation endpoint: ({relation.src}, "
                    f"{relation.rel}, {relation.dst})"
                )
            if src.type != "Package":
                raise GraphError(f"relation source is not a Package: {src}")
            if dst.type not in _REL_TARGETS[relation.rel]:
                raise GraphError(
                    f"relation {relation.rel} cannot target a {dst.type}"
                )

    def _build_index(self) -> dict[str, PackageFeatures]:
        buckets: dict[int, dict[str, set[str]]] = {}
        for relation in self.relations:
            dst = self.entities[relation.dst]
            bucket = buckets.setdefault(relation.src, {})
            bucket.setdefault(dst.type, set()).add(dst.name)
        index = {}
        for entity in self.entities.values():
            if entity.type != "Package":
                continue
            bucket = buckets.get(entity.id, {})
            categories = bucket.get("Category", set())
            if len(categories) != 1:
                raise GraphError(
                    f"package {entity.name!r} has {len(categories)} categories"
                )
            index[entity.name] = PackageFeatures(
                package=entity.name,
                robots=frozenset(bucket.get("Robot", ())),
                sensors=frozenset(bucket.get("Sensor", ())),
                category=Category(next(iter(categories))),
                functions=frozenset(bucket.get("Function", ())),
                characteristics=frozenset(bucket.get("Characteristic", ())),
                nodes=frozenset(bucket.get("Node", ())),
                services=frozenset(bucket.get("Service", ())),
                messages=frozenset(bucket.get("Message", ())),
                actions=frozenset(bucket.get("Action", ())),
                launches=frozenset(bucket.get("Launch", ())),
            )
        return index

    def package_names(self) -> list[str]:
        return sorted(self.index)


def build_graph(features_list: list[PackageFeatures]) -> Graph:
    """Link every feature bundle; ids are assigned in sorted package order."""
    builder = GraphBuilder()
    for features in sorted(features_list, key=lambda f: f.package):
        builder.link_features(features)
    return builder.freeze()


def package_view(graph: Graph, name: str) -> PackageFeatures:
    try:
        return graph.index[name]
    except KeyError:
        raise PackageNotFoundError(f"unknown package: {name}") from None


def stats(graph: Graph) -> dict:
    """Counts per entity type and relation kind, plus totals."""
    entity_counts = {t: 0 for t in ENTITY_TYPES}
    for entity in graph.entities.values():
        entity_counts[entity.type] += 1
    relation_counts = {k: 0 for k in RELATION_KINDS}
    for relation in graph.relations:
        relation_counts[relation.rel] += 1
    return {
        "entities": entity_counts,
        "relations": relation_counts,
        "total_entities": len(graph.entities),
        "total_relations": len(graph.relations),
    }


def save_graph(graph: Graph, path: str) -> None:
    """Serialize to a single JSON document, written atomically."""
    doc = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "entities": [
            {"id": e.id, "type": e.type, "name": e.name}
            | ({"attrs": dict(e.attrs)} if e.attrs else {})
            for e in sorted(graph.entities.values(), key=lambda e: e.id)
        ],
        "relations": [
            {"src": r.src, "rel": r.rel, "dst": r.dst}
            for r in sorted(graph.relations, key=lambda r: (r.src, r.rel, r.dst))
        ],
    }
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".rpkg-graph-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, sort_keys=True)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise GraphError(f"graph not readable: {path}") from exc
    except json.JSONDecodeError as exc:
        raise GraphError(f"graph file is not valid JSON: {exc}") from exc
    if doc.get("format") != FORMAT_NAME:
        raise GraphError(f"not a {FORMAT_NAME} file: {path}")
    if doc.get("version") != FORMAT_VERSION:
        raise GraphError(f"unsupported graph version: {doc.get('version')!r}")
    entities = {}
    for obj in doc.get("entities", []):
        entity = Entity(
            id=obj["id"],
            type=obj["type"],
            name=obj["name"],
            attrs=tuple(sorted(obj.get("attrs", {}).items())),
        )
        if entity.id in entities:
            raise GraphError(f"duplicate entity id: {entity.id}")
        entities[entity.id] = entity
    relations = [
        Relation(src=obj["src"], rel=obj["rel"], dst=obj["dst"])
        for obj in doc.get("relations", [])
    ]
    return Graph(entities=entities, relations=relations)
