"""Feature fusion search: per-dimension similarities and weighted ranking.

Every package in the graph is scored against the query on the dimensions the
query actually fills: hardware names by normalized edit-distance similarity,
function and characteristic phrases by averaged best cosine similarity of
their embeddings, and code-file names plus category by case-insensitive
exact match. The per-dimension scores fuse into a single weighted mean.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from rpkg.embedding import EmbeddingProvider, cosine, default_provider
from rpkg.errors import QueryError
from rpkg.extraction import PackageFeatures
from rpkg.fuzzy import similarity_ratio
from rpkg.graph import Graph

DIMENSIONS = (
    "robot", "sensor", "category", "function", "characteristics",
    "action", "node", "service", "message", "launch",
)

_CATEGORY_KINDS = {"meta", "description", "message", "function"}


@dataclass(frozen=True)
class WeightConfig:
    """Per-dimension fusion weights, each in (0, 1]."""

    robot: float = 1.0
    sensor: float = 1.0
    category: float = 1.0
    function: float = 0.8
    characteristics: float = 0.8
    action: float = 1.0
    node: float = 1.0
    service: float = 1.0
    message: float = 1.0
    launch: float = 1.0

    def __post_init__(self) -> None:
        for dim in DIMENSIONS:
            w = getattr(self, dim)
            if not 0 < w <= 1:
                raise ValueError(f"weight for {dim} must be in (0, 1]: {w}")

    def weight(self, dim: str) -> float:
        return getattr(self, dim)


@dataclass(frozen=True)
class SearchQuery:
    """Ten optional query fields; at least one must be present."""

    robot: str | None = None
    sensor: str | None = None
    category: str | None = None
    function: str | None = None
    characteristics: tuple[str, ...] | None = None
    action: str | None = None
    node: str | None = None
    service: str | None = None
    message: str | None = None
    launch: str | None = None

    def __post_init__(self) -> None:
        if not self.present_dimensions():
            raise QueryError("query has no dimensions: fill at least one field")
        if self.characteristics is not None and any(
            not c.strip() for c in self.characteristics
        ):
            raise QueryError("characteristics entries must be non-empty")

    def present_dimensions(self) -> tuple[str, ...]:
        present = []
        for dim in DIMENSIONS:
            value = getattr(self, dim)
            if value is None:
                continue
            if dim == "characteristics":
                if value:
                    present.append(dim)
            elif str(value).strip():
                present.append(dim)
        return tuple(present)

    def without(self, dim: str) -> "SearchQuery":
        """Copy with one dimension removed (raises if it was the only one)."""
        if dim not in DIMENSIONS:
            raise QueryError(f"unknown dimension: {dim}")
        return replace(self, **{dim: None})

    def to_json(self) -> dict:
        out: dict = {}
        for dim in DIMENSIONS:
            value = getattr(self, dim)
            if value is None:
                continue
            out[dim] = list(value) if dim == "characteristics" else value
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SearchQuery":
        kwargs: dict = {}
        for dim in DIMENSIONS:
            if dim not in obj or obj[dim] is None:
                continue
            value = obj[dim]
            kwargs[dim] = tuple(value) if dim == "characteristics" else value
        return cls(**kwargs)


@dataclass(frozen=True)
class RankedResult:
    package: str
    score: float
    per_dimension: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "package": self.package,
            "score": self.score,
            "per_dimension": dict(self.per_dimension),
        }


def sim_hardware(package_names: frozenset[str] | set[str], query_name: str) -> float:
    """Best normalized edit-distance similarity, scaled to [0, 1]."""
    if not package_names:
        return 0.0
    return max(similarity_ratio(n, query_name) for n in sorted(package_names)) / 100.0


def sim_semantic(
    package_phrases: frozenset[str] | set[str],
    query_phrases: list[str] | tuple[str, ...],
    provider: EmbeddingProvider,
) -> float:
    """Average over query phrases of the best non-negative cosine."""
    if not package_phrases or not query_phrases:
        return 0.0
    package_vectors = [provider.embed(p) for p in sorted(package_phrases)]
    total = 0.0
    for q in query_phrases:
        qv = provider.embed(q)
        total += max(max(0.0, cosine(pv, qv)) for pv in package_vectors)
    return total / len(query_phrases)


def sim_exact(
    package_names: frozenset[str] | set[str],
    query_names: frozenset[str] | set[str] | list[str] | tuple[str, ...],
) -> float:
    """Fraction of query names present in the package (existence semantics)."""
    if not package_names or not query_names:
        return 0.0
    package_keys = {n.strip().lower() for n in package_names}
    hits = sum(1 for q in query_names if q.strip().lower() in package_keys)
    return hits / len(query_names)


def fuse(
    per_dimension: dict[str, float], query: SearchQuery, weights: WeightConfig
) -> float:
    """Weighted mean over the dimensions present in the query."""
    present = query.present_dimensions()
    if not present:
        raise QueryError("unsatisfiable query: no dimensions present")
    num = 0.0
    den = 0.0
    for dim in DIMENSIONS:
        if dim not in present:
            continue
        num += weights.weight(dim) * per_dimension.get(dim, 0.0)
        den += weights.weight(dim)
    return num / den


def score_package(
    features: PackageFeatures,
    query: SearchQuery,
    provider: EmbeddingProvider,
) -> dict[str, float]:
    """Per-dimension similarities for the query-present dimensions."""
    sims: dict[str, float] = {}
    present = set(query.present_dimensions())
    if "robot" in present:
        sims["robot"] = sim_hardware(features.robots, query.robot)
    if "sensor" in present:
        sims["sensor"] = sim_hardware(features.sensors, query.sensor)
    if "category" in present:
        sims["category"] = sim_exact({features.category.label}, [query.category])
    if "function" in present:
        sims["function"] = sim_semantic(features.functions, [query.function], provider)
    if "characteristics" in present:
        sims["characteristics"] = sim_semantic(
            features.characteristics, query.characteristics, provider
        )
    if "action" in present:
        sims["action"] = sim_exact(features.actions, [query.action])
    if "node" in present:
        sims["node"] = sim_exact(features.nodes, [query.node])
    if "service" in present:
        sims["service"] = sim_exact(features.services, [query.service])
    if "message" in present:
        sims["message"] = sim_exact(features.messages, [query.message])
    if "launch" in present:
        sims["launch"] = sim_exact(features.launches, [query.launch])
    return sims


def ffs(
    graph: Graph,
    query: SearchQuery,
    weights: WeightConfig | None = None,
    k: int = 20,
    provider: EmbeddingProvider | None = None,
) -> list[RankedResult]:
    """Score every package, sort by descending score then name, return top k."""
    if k < 1:
        raise QueryError(f"k must be positive: {k}")
    weights = weights or WeightConfig()
    provider = provider or default_provider()
    results = []
    for name in graph.package_names():
        sims = score_package(graph.index[name], query, provider)
        score = fuse(sims, query, weights)
        results.append(RankedResult(package=name, score=score, per_dimension=sims))
    results.sort(key=lambda r: (-r.score, r.package))
    return results[:k]


def parse_query(fields: dict) -> SearchQuery:
    """Build a SearchQuery from raw string fields.

    Characteristics split on commas; category aliases (with or without the
    "package" suffix) normalize to the canonical "<kind> package" form.
    """
    kwargs: dict = {}
    for dim in DIMENSIONS:
        raw = fields.get(dim)
        if raw is None:
            continue
        if dim == "characteristics":
            if isinstance(raw, str):
                parts = [p.strip() for p in raw.split(",")]
            else:
                parts = [str(p).strip() for p in raw]
            parts = [p for p in parts if p]
            if parts:
                kwargs[dim] = tuple(parts)
            continue
        value = str(raw).strip()
        if not value:
            continue
        if dim == "category":
            base = value.lower()
            if base.endswith("package"):
                base = base[: -len("package")].strip()
            if base in _CATEGORY_KINDS:
                value = f"{base} package"
        kwargs[dim] = value
    if not kwargs:
        raise QueryError("query has no dimensions: fill at least one field")
    return SearchQuery(**kwargs)
