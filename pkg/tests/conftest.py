import json
import os

import pytest

from rpkg.corpus import load_vocabulary, scan_tree
from rpkg.embedding import EmbeddingProvider
from rpkg.extraction import extract_all
from rpkg.graph import build_graph

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")
CORPUS_DIR = os.path.join(FIXTURES, "corpus")
VOCAB_PATH = os.path.join(FIXTURES, "vocab.jsonl")
QUERIES_PATH = os.path.join(FIXTURES, "queries_table.jsonl")
GOLDENS_PATH = os.path.join(FIXTURES, "goldens.json")


@pytest.fixture(scope="session")
def vocab():
    return load_vocabulary(VOCAB_PATH)


@pytest.fixture(scope="session")
def records():
    return scan_tree(CORPUS_DIR)


@pytest.fixture(scope="session")
def features_list(records, vocab):
    return [extract_all(r, vocab) for r in records]


@pytest.fixture(scope="session")
def fixture_graph(features_list):
    return build_graph(features_list)


@pytest.fixture(scope="session")
def goldens():
    with open(GOLDENS_PATH, encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def table_queries():
    queries = []
    with open(QUERIES_PATH, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                queries.append(json.loads(line))
    return queries


@pytest.fixture()
def provider():
    return EmbeddingProvider()
