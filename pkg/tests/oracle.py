"""Independent naive reference implementations used as test oracles.

Everything here is deliberately written from first principles, without
importing the package under test: full-matrix edit distance, exact rational
rounding for the similarity ratio, a scratch trigram embedder, and a direct
transcription of the four similarity formulas plus their weighted fusion.
"""

from fractions import Fraction

ORACLE_DIMENSIONS = (
    "robot", "sensor", "category", "function", "characteristics",
    "action", "node", "service", "message", "launch",
)

FNV_OFFSET = 14695981039346656037
FNV_PRIME = 1099511628211
DIM = 256


def oracle_levenshtein(a: str, b: str) -> int:
    """Full (len(a)+1) x (len(b)+1) dynamic-programming matrix."""
    rows, cols = len(a) + 1, len(b) + 1
    matrix = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        matrix[i][0] = i
    for j in range(cols):
        matrix[0][j] = j
    for i in range(1, rows):
        for j in range(1, cols):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            matrix[i][j] = min(
                matrix[i - 1][j] + 1,
                matrix[i][j - 1] + 1,
                matrix[i - 1][j - 1] + cost,
            )
    return matrix[rows - 1][cols - 1]


def oracle_ratio(a: str, b: str) -> int:
    """100 * (m - d) / m, rounded half away from zero, via exact rationals."""
    a, b = a.lower(), b.lower()
    m = max(len(a), len(b), 1)
    d = oracle_levenshtein(a, b)
    value = Fraction(100 * (m - d), m)
    rounded = (value + Fraction(1, 2)).__floor__()
    return int(rounded)


def oracle_normalize(s: str) -> str:
    chars = [c if ("a" <= c <= "z" or "0" <= c <= "9") else " " for c in s.lower()]
    return " ".join("".join(chars).split())


def oracle_embed(s: str) -> list[float]:
    text = oracle_normalize(s)
    vec = [0.0] * DIM
    if not text:
        return vec
    grams = [text] if len(text) < 3 else [
        text[i : i + 3] for i in range(len(text) - 2)
    ]
    for gram in grams:
        h = FNV_OFFSET
        for ch in gram.encode("utf-8"):
            h = ((h ^ ch) * FNV_PRIME) % (1 << 64)
        sign = 1.0 if h < (1 << 63) else -1.0
        vec[h % DIM] += sign
    norm = sum(x * x for x in vec) ** 0.5
    if norm > 0:
        vec = [x / norm for x in vec]
    return vec


def oracle_cosine(u: list[float], v: list[float]) -> float:
    dot = sum(a * b for a, b in zip(u, v))
    nu = sum(a * a for a in u) ** 0.5
    nv = sum(b * b for b in v) ** 0.5
    if nu == 0 or nv == 0:
        return 0.0
    return dot / (nu * nv)


def oracle_sim_hardware(names, query_name: str) -> float:
    if not names:
        return 0.0
    return max(oracle_ratio(n, query_name) for n in names) / 100.0


def oracle_sim_semantic(phrases, query_phrases) -> float:
    if not phrases or not query_phrases:
        return 0.0
    vectors = [oracle_embed(p) for p in phrases]
    total = 0.0
    for q in query_phrases:
        qv = oracle_embed(q)
        total += max(max(0.0, oracle_cosine(pv, qv)) for pv in vectors)
    return total / len(query_phrases)


def oracle_sim_exact(names, query_names) -> float:
    if not names or not query_names:
        return 0.0
    keys = {n.strip().lower() for n in names}
    hits = sum(1 for q in query_names if q.strip().lower() in keys)
    return hits / len(query_names)


def oracle_score(features: dict, query: dict, weights: dict) -> float:
    """features/query are plain dicts; query values are strings or lists."""
    sims = {}
    if "robot" in query:
        sims["robot"] = oracle_sim_hardware(features["robots"], query["robot"])
    if "sensor" in query:
        sims["sensor"] = oracle_sim_hardware(features["sensors"], query["sensor"])
    if "category" in query:
        sims["category"] = oracle_sim_exact(
            [features["category"] + " package"], [query["category"]]
        )
    if "function" in query:
        sims["function"] = oracle_sim_semantic(
            sorted(features["functions"]), [query["function"]]
        )
    if "characteristics" in query:
        sims["characteristics"] = oracle_sim_semantic(
            sorted(features["characteristics"]), list(query["characteristics"])
        )
    for dim, attr in (
        ("action", "actions"), ("node", "nodes"), ("service", "services"),
        ("message", "messages"), ("launch", "launches"),
    ):
        if dim in query:
            sims[dim] = oracle_sim_exact(features[attr], [query[dim]])
    num = 0.0
    den = 0.0
    for dim in ORACLE_DIMENSIONS:
        if dim not in query:
            continue
        num += weights[dim] * sims.get(dim, 0.0)
        den += weights[dim]
    return num / den


def oracle_rank(features_by_name: dict, query: dict, weights: dict) -> list[str]:
    """Full ranking: descending score, ties by ascending package name."""
    scored = [
        (oracle_score(features, query, weights), name)
        for name, features in features_by_name.items()
    ]
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    return [name for _, name in scored]
