"""Pure-Python reference kernels.

Used when the compiled extension is unavailable (or when RPKG_PURE=1 is set).
Both implementations must stay bit-identical in behaviour; the benchmark in
benchmarks/bench_kernels.py compares them.
"""

BACKEND = "pure"

_FNV_OFFSET = 14695981039346656037
_FNV_PRIME = 1099511628211
_MASK64 = (1 << 64) - 1

EMBED_DIM = 256


def levenshtein(a: str, b: str) -> int:
    """Edit distance with unit insert/delete/substitute costs."""
    if a == b:
        return 0
    if not a:
        return len(b)
    if not b:
        return len(a)
    # Two-row dynamic program; rows indexed over b.
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        append = cur.append
        for j, cb in enumerate(b, 1):
            append(min(cur[-1] + 1, prev[j] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def embed_accumulate(text: str) -> list[float]:
    """Signed character-trigram counts of *text* hashed into EMBED_DIM bins.

    Grams are contiguous character 3-grams (spaces included); a text shorter
    than 3 characters is a single gram. Each gram is hashed with 64-bit
    FNV-1a over its UTF-8 bytes; the hash picks the bin (mod EMBED_DIM) and
    the sign (+1 when the top bit is clear). The caller normalizes.
    """
    vec = [0.0] * EMBED_DIM
    if not text:
        return vec
    if len(text) < 3:
        grams = [text]
    else:
        grams = [text[i : i + 3] for i in range(len(text) - 2)]
    for gram in grams:
        h = _FNV_OFFSET
        for byte in gram.encode("utf-8"):
            h = ((h ^ byte) * _FNV_PRIME) & _MASK64
        sign = 1.0 if h < 1 << 63 else -1.0
        vec[h % EMBED_DIM] += sign
    return vec
