"""Benchmark the compiled kernels against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Both backends are imported directly so the comparison does not depend on
which one the package selected at import time.
"""

import random
import string
import time

from rpkg.kernels import _pure

try:
    from rpkg.kernels import _speedups
except ImportError:
    _speedups = None


def _random_strings(count: int, max_len: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    alphabet = string.ascii_lowercase + "_0123456789 "
    return [
        "".join(rng.choice(alphabet) for _ in range(rng.randrange(3, max_len)))
        for _ in range(count)
    ]


def _bench(label: str, fn, repeat: int = 3) -> float:
    best = min(_timed(fn) for _ in range(repeat))
    print(f"  {label:10s} {best * 1000:9.2f} ms")
    return best


def _timed(fn) -> float:
    started = time.perf_counter()
    fn()
    return time.perf_counter() - started


def main() -> None:
    pairs = list(zip(
        _random_strings(2000, 24, seed=1), _random_strings(2000, 24, seed=2)
    ))
    phrases = _random_strings(2000, 60, seed=3)

    print(f"levenshtein: {len(pairs)} pairs")
    pure_lev = _bench("pure", lambda: [_pure.levenshtein(a, b) for a, b in pairs])
    if _speedups is not None:
        fast_lev = _bench(
            "compiled", lambda: [_speedups.levenshtein(a, b) for a, b in pairs]
        )
        print(f"  speedup    {pure_lev / fast_lev:9.1f}x")

    print(f"embed_accumulate: {len(phrases)} phrases")
    pure_emb = _bench("pure", lambda: [_pure.embed_accumulate(p) for p in phrases])
    if _speedups is not None:
        fast_emb = _bench(
            "compiled", lambda: [_speedups.embed_accumulate(p) for p in phrases]
        )
        print(f"  speedup    {pure_emb / fast_emb:9.1f}x")

    if _speedups is None:
        print("compiled backend unavailable; built the extension first?")
        return

    sample_pairs = pairs[:200]
    assert all(
        _pure.levenshtein(a, b) == _speedups.levenshtein(a, b)
        for a, b in sample_pairs
    )
    assert all(
        _pure.embed_accumulate(p) == _speedups.embed_accumulate(p)
        for p in phrases[:200]
    )
    print("agreement check: ok")


if __name__ == "__main__":
    main()
