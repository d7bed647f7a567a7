"""Acceptance suite: one test per top-level criterion.

Each test prints a single PASS line when its assertions hold; a failure
surfaces through pytest as usual. The oracle implementations live in
tests/oracle.py and are independent of the package under test.
"""

import json
import random
import string
import time

from rpkg.corpus import load_vocabulary, scan_tree
from rpkg.extraction import extract_all
from rpkg.fuzzy import similarity_ratio
from rpkg.graph import build_graph, load_graph, package_view, save_graph
from rpkg.phrases import extract_phrases
from rpkg.postag import pos_tag
from rpkg.search import DIMENSIONS, SearchQuery, WeightConfig, ffs, parse_query
from rpkg.evalharness import load_queries, run_eval
from tests.conftest import CORPUS_DIR, QUERIES_PATH, VOCAB_PATH
from tests.oracle import oracle_levenshtein, oracle_rank, oracle_ratio
from tests.synth import make_random_queries, make_synthetic_corpus

PASS = "PASS"


def _weight_map(weights: WeightConfig) -> dict:
    return {dim: weights.weight(dim) for dim in DIMENSIONS}


def test_criterion_extraction_goldens(records, vocab, goldens):
    started = time.monotonic()
    for record in records:
        assert extract_all(record, vocab).to_json() == goldens[record.name], record.name
    by_name = {g["package"]: g for g in goldens.values()}
    assert by_name["turtlebot_bringup"]["launches"] == ["3dsensor", "minimal"]
    assert by_name["velodyne_msgs"]["sensors"] == ["Velodyne"]
    assert by_name["velodyne_msgs"]["category"] == "message"
    elapsed = time.monotonic() - started
    assert elapsed < 5.0, f"extraction goldens took {elapsed:.2f}s"
    print(f"{PASS}: extraction goldens exact on {len(records)} packages "
          f"({elapsed:.2f}s)")


def test_criterion_pos_micro_examples():
    sentence = (
        "hector_quadrotor_gazebo provides a quadrotor model for the gazebo simulator"
    )
    functions, characteristics = extract_phrases(pos_tag(sentence))
    assert functions == ["provides a quadrotor model"]
    assert characteristics == ["the gazebo simulator"]
    _, characteristics = extract_phrases(pos_tag("Face detection in images."))
    assert "Face detection" in characteristics
    print(f"{PASS}: tagging micro-examples reproduce exactly")


def test_criterion_fuzzy_scorer():
    rng = random.Random(20260824)
    alphabet = string.ascii_letters + string.digits + "_-"
    for _ in range(1000):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 22)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 22)))
        assert similarity_ratio(a, b) == oracle_ratio(a, b), (a, b)
    assert oracle_levenshtein("kitten", "sitting") == 3
    assert similarity_ratio("turtlebot2", "turtlebot") == 90  # at threshold
    assert similarity_ratio("a" * 19, "a" * 17 + "bb") == 89  # just below
    print(f"{PASS}: similarity ratio matches brute-force oracle on 1000 pairs")


def test_criterion_oracle_equivalence(provider):
    started = time.monotonic()
    corpus = make_synthetic_corpus(n=50, seed=2024)
    graph = build_graph(corpus)
    features_by_name = {f.package: f.to_json() for f in corpus}
    weights = WeightConfig()
    weight_map = _weight_map(weights)
    queries = make_random_queries(corpus, count=100, seed=4096)
    for raw in queries:
        query = SearchQuery.from_json(raw)
        got = [r.package for r in ffs(graph, query, weights, len(corpus), provider)]
        want = oracle_rank(features_by_name, raw, weight_map)
        assert got == want, raw
    elapsed = time.monotonic() - started
    assert elapsed < 30.0, f"oracle equivalence took {elapsed:.2f}s"
    print(f"{PASS}: full rankings equal naive oracle on 100 random queries "
          f"({elapsed:.2f}s)")


def test_criterion_fusion_invariants(fixture_graph, provider, table_queries):
    class ScaledWeights:
        def __init__(self, base: WeightConfig, factor: float) -> None:
            self._base = base
            self._factor = factor

        def weight(self, dim: str) -> float:
            return self._base.weight(dim) * self._factor

    base = WeightConfig()
    total = len(fixture_graph.index)
    for entry in table_queries:
        query = parse_query(entry["query"])
        reference = ffs(fixture_graph, query, base, total, provider)
        for factor in (0.5, 2.0, 10.0):
            scaled = ffs(
                fixture_graph, query, ScaledWeights(base, factor), total, provider
            )
            assert [r.package for r in scaled] == [r.package for r in reference]
            for a, b in zip(scaled, reference):
                assert abs(a.score - b.score) < 1e-9
        # Removing a dimension the query does not use changes nothing.
        absent = next(d for d in DIMENSIONS if d not in query.present_dimensions())
        without = ffs(fixture_graph, query.without(absent), base, total, provider)
        assert [(r.package, r.score) for r in without] == [
            (r.package, r.score) for r in reference
        ]
    print(f"{PASS}: fusion is invariant to uniform weight scaling and "
          f"absent-dimension removal")


def test_criterion_desk_scale_scenario(fixture_graph, provider, table_queries):
    features_by_name = {
        name: features.to_json() for name, features in fixture_graph.index.items()
    }
    weights = WeightConfig()
    weight_map = _weight_map(weights)
    total = len(features_by_name)
    for entry in table_queries:
        query = parse_query(entry["query"])
        oracle_query = query.to_json()
        want = oracle_rank(features_by_name, oracle_query, weight_map)
        assert want[0] == entry["expected_package"], entry["id"]
        got = [r.package for r in ffs(fixture_graph, query, weights, total, provider)]
        assert got == want, entry["id"]
    print(f"{PASS}: all {len(table_queries)} catalog queries rank the desired "
          f"package first, matching the oracle")


def test_criterion_eval_harness(fixture_graph, provider):
    queries = load_queries(QUERIES_PATH)
    report = run_eval(fixture_graph, queries, provider=provider)
    values = [report.accuracy_at[k] for k in report.levels]
    assert values == sorted(values)
    sampled_a = run_eval(fixture_graph, queries, sample_size=10, seed=3,
                         provider=provider)
    sampled_b = run_eval(fixture_graph, queries, sample_size=10, seed=3,
                         provider=provider)
    assert sampled_a.to_json() == sampled_b.to_json()
    ablated = run_eval(fixture_graph, queries, ablate="service", provider=provider)
    assert ablated.accuracy_at == report.accuracy_at
    assert ablated.per_query == report.per_query
    print(f"{PASS}: accuracy monotone in K, seeded sampling reproducible, "
          f"no-op ablation invariant")


def test_criterion_graph_round_trip(fixture_graph, features_list, tmp_path):
    path = tmp_path / "graph.json"
    save_graph(fixture_graph, str(path))
    loaded = load_graph(str(path))
    for features in features_list:
        assert package_view(loaded, features.package) == features
    shared_phrase = [
        e for e in loaded.entities.values()
        if e.type == "Characteristic" and e.name == "the Turtlebot2"
    ]
    assert len(shared_phrase) == 1
    shared_launch = [
        e for e in loaded.entities.values()
        if e.type == "Launch" and e.name == "minimal"
    ]
    assert len(shared_launch) == 2
    print(f"{PASS}: graph round-trips losslessly; named features shared, "
          f"code files per-package")


def test_criterion_determinism(tmp_path, provider, table_queries):
    rankings = []
    blobs = []
    for run in range(2):
        vocab = load_vocabulary(VOCAB_PATH)
        records = scan_tree(CORPUS_DIR)
        graph = build_graph([extract_all(r, vocab) for r in records])
        path = tmp_path / f"graph-{run}.json"
        save_graph(graph, str(path))
        blobs.append(path.read_bytes())
        run_ranking = []
        for entry in table_queries:
            query = parse_query(entry["query"])
            results = ffs(graph, query, WeightConfig(), len(graph.index), provider)
            run_ranking.append([(r.package, r.score) for r in results])
        rankings.append(run_ranking)
    assert blobs[0] == blobs[1]
    assert rankings[0] == rankings[1]
    print(f"{PASS}: build and search are byte-for-byte deterministic")
