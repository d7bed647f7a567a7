"""The compiled and pure kernels must be interchangeable bit for bit."""

import random
import string
import subprocess
import sys

from hypothesis import given
from hypothesis import strategies as st

from rpkg.kernels import BACKEND, EMBED_DIM, _pure, embed_accumulate, levenshtein
from tests.oracle import oracle_levenshtein


def test_levenshtein_known_cases():
    assert levenshtein("kitten", "sitting") == 3
    assert levenshtein("", "") == 0
    assert levenshtein("abc", "") == 3
    assert levenshtein("", "abc") == 3
    assert levenshtein("same", "same") == 0


def test_levenshtein_matches_oracle_on_random_pairs():
    rng = random.Random(1234)
    alphabet = string.ascii_lowercase + "_0123456789"
    for _ in range(500):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 24)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 24)))
        assert levenshtein(a, b) == oracle_levenshtein(a, b)


@given(st.text(max_size=30), st.text(max_size=30))
def test_levenshtein_properties(a, b):
    d = levenshtein(a, b)
    assert d == levenshtein(b, a)
    assert d >= abs(len(a) - len(b))
    assert d <= max(len(a), len(b))
    assert (d == 0) == (a == b)


def test_backends_agree_on_levenshtein():
    rng = random.Random(99)
    samples = ["", "a", "abc", "ünïcode", "naïve", "全角文字"]
    alphabet = string.printable
    for _ in range(200):
        samples.append(
            "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 16)))
        )
    for a in samples:
        for b in samples[:10]:
            assert levenshtein(a, b) == _pure.levenshtein(a, b)


def test_backends_agree_on_embedding():
    texts = [
        "", "abc", "the gazebo simulator", "provides a quadrotor model",
        "velodyne 3d lidar", "x" * 100, "a b c d e f g",
    ]
    for text in texts:
        assert embed_accumulate(text) == _pure.embed_accumulate(text)


def test_embed_dimension():
    assert EMBED_DIM == 256
    assert len(embed_accumulate("anything")) == 256


def test_pure_backend_forced_by_env():
    code = (
        "import rpkg.kernels as k; print(k.BACKEND); "
        "print(k.levenshtein('kitten','sitting'))"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        env={"PATH": "/usr/bin:/bin", "RPKG_PURE": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.split() == ["pure", "3"]


def test_default_backend_is_identified():
    assert BACKEND in ("compiled", "pure")
