"""Evaluation mechanics: top@K accuracy, seeded sampling, ablation runs."""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass, field

from rpkg.embedding import EmbeddingProvider
from rpkg.errors import EvalError, QueryError
from rpkg.graph import Graph
from rpkg.search import DIMENSIONS, SearchQuery, WeightConfig, ffs

DEFAULT_LEVELS = (1, 5, 10, 15, 20)

NOT_FOUND = "not found"


@dataclass(frozen=True)
class LabeledQuery:
    id: str
    query: SearchQuery
    expected_package: str

    def __post_init__(self) -> None:
        if not self.expected_package:
            raise EvalError(f"query {self.id!r}: empty expected package")


@dataclass
class EvalReport:
    levels: list[int]
    accuracy_at: dict[int, float]
    per_query: dict[str, int | str] = field(default_factory=dict)
    weights: dict[str, float] = field(default_factory=dict)
    ablated: str | None = None
    sample_size: int | None = None
    seed: int | None = None

    def to_json(self) -> dict:
        return {
            "levels": list(self.levels),
            "accuracy_at": {str(k): v for k, v in self.accuracy_at.items()},
            "per_query": dict(self.per_query),
            "config": {
                "weights": dict(self.weights),
                "ablated": self.ablated,
                "sample_size": self.sample_size,
                "seed": self.seed,
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> "EvalReport":
        config = obj.get("config", {})
        return cls(
            levels=[int(k) for k in obj["levels"]],
            accuracy_at={int(k): v for k, v in obj["accuracy_at"].items()},
            per_query=dict(obj.get("per_query", {})),
            weights=dict(config.get("weights", {})),
            ablated=config.get("ablated"),
            sample_size=config.get("sample_size"),
            seed=config.get("seed"),
        )


def load_queries(path: str) -> list[LabeledQuery]:
    """Load a line-delimited query set; ids must be unique."""
    queries = []
    seen: dict[str, int] = {}
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise EvalError(f"query set not readable: {path}") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise EvalError(f"line {lineno}: invalid JSON ({exc})") from exc
            qid = obj.get("id")
            if not qid:
                raise EvalError(f"line {lineno}: missing id")
            if qid in seen:
                raise EvalError(
                    f"line {lineno}: duplicate id {qid!r} "
                    f"(first seen on line {seen[qid]})"
                )
            seen[qid] = lineno
            try:
                query = SearchQuery.from_json(obj.get("query", {}))
            except QueryError as exc:
                raise EvalError(f"line {lineno}: {exc}") from exc
            queries.append(
                LabeledQuery(
                    id=qid,
                    query=query,
                    expected_package=obj.get("expected_package", ""),
                )
            )
    return queries


def topk_accuracy(
    results_per_query: dict[str, list[str]],
    expected: dict[str, str],
    levels: list[int] | tuple[int, ...],
) -> dict[int, float]:
    """accuracy_at[K] = fraction of queries with expected rank <= K."""
    for qid in expected:
        if qid not in results_per_query:
            raise EvalError(f"missing results for query id {qid!r}")
    if not expected:
        return {k: 0.0 for k in levels}
    ranks = []
    for qid, want in expected.items():
        ranking = results_per_query[qid]
        ranks.append(ranking.index(want) + 1 if want in ranking else None)
    return {
        k: sum(1 for r in ranks if r is not None and r <= k) / len(ranks)
        for k in levels
    }


def run_eval(
    graph: Graph,
    queries: list[LabeledQuery],
    levels: list[int] | tuple[int, ...] = DEFAULT_LEVELS,
    weights: WeightConfig | None = None,
    ablate: str | None = None,
    sample_size: int | None = None,
    seed: int = 0,
    provider: EmbeddingProvider | None = None,
) -> EvalReport:
    """Run every (possibly ablated, possibly sampled) query through ffs."""
    weights = weights or WeightConfig()
    if ablate is not None and ablate not in DIMENSIONS:
        raise EvalError(f"unknown ablation dimension: {ablate}")
    known = set(graph.index)
    for lq in queries:
        if lq.expected_package not in known:
            raise EvalError(
                f"query {lq.id!r}: expected package "
                f"{lq.expected_package!r} is not in the graph"
            )

    selected = list(queries)
    if sample_size is not None:
        if sample_size > len(queries):
            raise EvalError(
                f"sample size {sample_size} exceeds query count {len(queries)}"
            )
        rng = random.Random(seed)
        selected = rng.sample(selected, sample_size)

    total = len(graph.index)
    per_query: dict[str, int | str] = {}
    results_per_query: dict[str, list[str]] = {}
    for lq in selected:
        query = lq.query
        if ablate is not None:
            try:
                query = query.without(ablate)
            except QueryError:
                # Exclusion removed the only dimension: unsatisfiable.
                per_query[lq.id] = NOT_FOUND
                results_per_query[lq.id] = []
                continue
        ranking = [r.package for r in ffs(graph, query, weights, max(total, 1), provider)]
        results_per_query[lq.id] = ranking
        rank = ranking.index(lq.expected_package) + 1 if lq.expected_package in ranking else None
        per_query[lq.id] = rank if rank is not None else NOT_FOUND

    accuracy = topk_accuracy(
        results_per_query,
        {lq.id: lq.expected_package for lq in selected},
        levels,
    )
    return EvalReport(
        levels=list(levels),
        accuracy_at=accuracy,
        per_query=per_query,
        weights={dim: weights.weight(dim) for dim in DIMENSIONS},
        ablated=ablate,
        sample_size=sample_size,
        seed=seed if sample_size is not None else None,
    )


def write_report(report: EvalReport, path: str, format: str = "json") -> None:
    """Write a report as JSON (lossless) or CSV (level,accuracy table)."""
    if format == "json":
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")
    elif format == "csv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["level", "accuracy"])
            for level in report.levels:
                writer.writerow([level, f"{report.accuracy_at[level]:.4f}"])
    else:
        raise EvalError(f"unknown report format: {format}")
