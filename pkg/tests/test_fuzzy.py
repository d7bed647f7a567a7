"""Name-similarity scorer against an exact rational-arithmetic oracle."""

import random
import string

from hypothesis import given
from hypothesis import strategies as st

from rpkg.fuzzy import similarity_ratio
from tests.oracle import oracle_ratio


def test_known_ratios():
    assert similarity_ratio("turtlebot", "turtlebot2") == 90
    assert similarity_ratio("point", "pointgrey") == 56
    assert similarity_ratio("same", "same") == 100
    assert similarity_ratio("same", "SAME") == 100
    assert similarity_ratio("abc", "xyz") == 0
    assert similarity_ratio("", "") == 100


def test_threshold_boundary_cases():
    # Length 10 vs 9 with one edit: exactly 90.
    assert similarity_ratio("turtlebot2", "turtlebot") == 90
    # Length 19 with two edits: 100*17/19 rounds to 89.
    a = "a" * 19
    b = "a" * 17 + "bb"
    assert similarity_ratio(a, b) == 89


def test_matches_oracle_on_1000_random_pairs():
    rng = random.Random(777)
    alphabet = string.ascii_letters + string.digits + "_-"
    for _ in range(1000):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 20)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randrange(0, 20)))
        assert similarity_ratio(a, b) == oracle_ratio(a, b)


@given(st.text(max_size=25), st.text(max_size=25))
def test_ratio_properties(a, b):
    r = similarity_ratio(a, b)
    assert 0 <= r <= 100
    assert r == similarity_ratio(b, a)
    if a.lower() == b.lower():
        assert r == 100
