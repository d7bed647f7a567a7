"""Command-line entry points: build, search, eval, serve, stats.

Exit codes are a stable contract: 0 success, 1 build/IO failure, 2 invalid
usage or input.
"""

from __future__ import annotations

import json
import os
import sys

import click

from rpkg import evalharness
from rpkg import graph as graphmod
from rpkg.corpus import load_manifest, load_vocabulary, scan_tree
from rpkg.embedding import EmbeddingProvider, EmbeddingStore
from rpkg.errors import QueryError, RpkgError
from rpkg.extraction import extract_all
from rpkg.search import DIMENSIONS, WeightConfig, ffs, parse_query

EXIT_FAILURE = 1
EXIT_USAGE = 2


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _make_provider(embeddings: str | None) -> EmbeddingProvider:
    store = EmbeddingStore.load(embeddings) if embeddings else None
    return EmbeddingProvider(
        store=store, remote_url=os.environ.get("RPKG_EMBED_URL")
    )


def _load_graph(path: str) -> graphmod.Graph:
    try:
        return graphmod.load_graph(path)
    except RpkgError as exc:
        _fail(str(exc), EXIT_USAGE)
        raise AssertionError  # unreachable


def _weights(function: float | None, characteristics: float | None) -> WeightConfig:
    kwargs = {}
    if function is not None:
        kwargs["function"] = function
    if characteristics is not None:
        kwargs["characteristics"] = characteristics
    try:
        return WeightConfig(**kwargs)
    except ValueError as exc:
        _fail(str(exc), EXIT_USAGE)
        raise AssertionError


@click.group()
def main() -> None:
    """Semantic package search over a package knowledge graph."""


@main.command()
@click.option("--corpus", "corpus_path", required=True, help="Package tree or .jsonl manifest.")
@click.option("--vocab", "vocab_path", required=True, help="Hardware vocabulary (.jsonl).")
@click.option("--out", "out_path", required=True, help="Graph output path.")
@click.option("--embeddings", "embeddings_path", default=None, help="Embedding store (unused at build time; validated).")
def build(corpus_path: str, vocab_path: str, out_path: str, embeddings_path: str | None) -> None:
    """Ingest a corpus, extract features, link the graph, save it."""
    try:
        vocab = load_vocabulary(vocab_path)
        if os.path.isdir(corpus_path):
            records = scan_tree(corpus_path)
        else:
            records = load_manifest(corpus_path)
        if embeddings_path:
            EmbeddingStore.load(embeddings_path)
        features = [extract_all(r, vocab) for r in records]
        graph = graphmod.build_graph(features)
        graphmod.save_graph(graph, out_path)
    except RpkgError as exc:
        _fail(str(exc), EXIT_FAILURE)
    counts = graphmod.stats(graph)
    click.echo(
        f"packages={counts['entities']['Package']} "
        f"entities={counts['total_entities']} "
        f"relations={counts['total_relations']}"
    )


def _query_options(fn):
    fn = click.option("--robot", default=None)(fn)
    fn = click.option("--sensor", default=None)(fn)
    fn = click.option("--category", default=None)(fn)
    fn = click.option("--function", default=None)(fn)
    fn = click.option("--characteristics", default=None, help="Comma-separated phrases.")(fn)
    fn = click.option("--action", default=None)(fn)
    fn = click.option("--node", default=None)(fn)
    fn = click.option("--service", default=None)(fn)
    fn = click.option("--message", default=None)(fn)
    fn = click.option("--launch", default=None)(fn)
    return fn


@main.command()
@click.option("--graph", "graph_path", required=True)
@_query_options
@click.option("--top", default=20, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--weight-function", type=float, default=None)
@click.option("--weight-characteristics", type=float, default=None)
@click.option("--embeddings", "embeddings_path", default=None)
def search(graph_path, top, fmt, weight_function, weight_characteristics, embeddings_path, **fields) -> None:
    """Rank packages against a ten-field query."""
    graph = _load_graph(graph_path)
    weights = _weights(weight_function, weight_characteristics)
    try:
        query = parse_query({d: fields.get(d) for d in DIMENSIONS})
    except QueryError as exc:
        _fail(str(exc), EXIT_USAGE)
    try:
        provider = _make_provider(embeddings_path)
        results = ffs(graph, query, weights, max(top, 1), provider)
    except RpkgError as exc:
        _fail(str(exc), EXIT_FAILURE)
    if fmt == "json":
        click.echo(json.dumps([r.to_json() for r in results]))
    else:
        for rank, result in enumerate(results, 1):
            dims = ", ".join(
                f"{d}={result.per_dimension[d]:.4f}"
                for d in DIMENSIONS
                if d in result.per_dimension
            )
            click.echo(f"{rank:4d}  {result.package:40s} {result.score:.4f}  {dims}")


@main.command(name="eval")
@click.option("--graph", "graph_path", required=True)
@click.option("--queries", "queries_path", required=True)
@click.option("--levels", default="1,5,10,15,20", show_default=True)
@click.option("--ablate", default=None, type=click.Choice(DIMENSIONS))
@click.option("--sample-size", type=int, default=None)
@click.option("--seed", type=int, default=0)
@click.option("--out", "out_path", default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--embeddings", "embeddings_path", default=None)
def eval_cmd(graph_path, queries_path, levels, ablate, sample_size, seed, out_path, fmt, embeddings_path) -> None:
    """Top@K accuracy over a labeled query set."""
    graph = _load_graph(graph_path)
    try:
        level_values = [int(x) for x in levels.split(",") if x.strip()]
        queries = evalharness.load_queries(queries_path)
        provider = _make_provider(embeddings_path)
        report = evalharness.run_eval(
            graph,
            queries,
            levels=level_values,
            ablate=ablate,
            sample_size=sample_size,
            seed=seed,
            provider=provider,
        )
    except (RpkgError, ValueError) as exc:
        _fail(str(exc), EXIT_USAGE)
    if ablate:
        click.echo(f"ablated dimension: {ablate}")
    for level in report.levels:
        click.echo(f"top@{level:<3d} accuracy={report.accuracy_at[level]:.4f}")
    if out_path:
        try:
            evalharness.write_report(report, out_path, fmt)
        except (RpkgError, OSError) as exc:
            _fail(str(exc), EXIT_FAILURE)


@main.command()
@click.option("--graph", "graph_path", required=True)
@click.option("--port", default=8080, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static", "static_dir", default=None, help="Directory of UI assets.")
@click.option("--embeddings", "embeddings_path", default=None)
def serve(graph_path, port, host, static_dir, embeddings_path) -> None:
    """Serve the search API (and optionally the UI) over HTTP."""
    import uvicorn

    from rpkg.service import create_app

    if not 1 <= port <= 65535:
        _fail(f"port out of range: {port}", EXIT_USAGE)
    graph = _load_graph(graph_path)
    try:
        provider = _make_provider(embeddings_path)
    except RpkgError as exc:
        _fail(str(exc), EXIT_USAGE)
    app = create_app(graph, provider=provider, static_dir=static_dir)
    try:
        uvicorn.run(app, host=host, port=port, log_level="warning")
    except SystemExit:
        raise
    except OSError as exc:
        _fail(f"cannot bind {host}:{port}: {exc}", EXIT_FAILURE)


@main.command(name="stats")
@click.option("--graph", "graph_path", required=True)
def stats_cmd(graph_path) -> None:
    """Per-type entity and per-kind relation counts."""
    graph = _load_graph(graph_path)
    counts = graphmod.stats(graph)
    click.echo("entities:")
    for type_ in graphmod.ENTITY_TYPES:
        click.echo(f"  {type_:15s} {counts['entities'][type_]}")
    click.echo("relations:")
    for kind in graphmod.RELATION_KINDS:
        click.echo(f"  {kind:20s} {counts['relations'][kind]}")
    click.echo(f"total entities:  {counts['total_entities']}")
    click.echo(f"total relations: {counts['total_relations']}")


if __name__ == "__main__":
    main()
