# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels: edit distance and signed-trigram accumulation."""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"

EMBED_DIM = 256

cdef unsigned long long FNV_OFFSET = 14695981039346656037ULL
cdef unsigned long long FNV_PRIME = 1099511628211ULL


def levenshtein(str a, str b):
    """Edit distance with unit insert/delete/substitute costs."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j
    cdef int cost, best, cand
    cdef Py_UCS4 ca
    if a == b:
        return 0
    if la == 0:
        return lb
    if lb == 0:
        return la
    cdef int *prev = <int *> malloc((lb + 1) * sizeof(int))
    cdef int *cur = <int *> malloc((lb + 1) * sizeof(int))
    cdef int *tmp
    if prev == NULL or cur == NULL:
        free(prev)
        free(cur)
        raise MemoryError()
    try:
        for j in range(lb + 1):
            prev[j] = <int> j
        for i in range(la):
            ca = a[i]
            cur[0] = <int> i + 1
            for j in range(1, lb + 1):
                cost = 0 if ca == <Py_UCS4> b[j - 1] else 1
                best = cur[j - 1] + 1
                cand = prev[j] + 1
                if cand < best:
                    best = cand
                cand = prev[j - 1] + cost
                if cand < best:
                    best = cand
                cur[j] = best
            tmp = prev
            prev = cur
            cur = tmp
        return prev[lb]
    finally:
        free(prev)
        free(cur)


def embed_accumulate(str text):
    """Signed character-trigram counts of *text* hashed into EMBED_DIM bins."""
    cdef list vec = [0.0] * 256
    cdef bytes data
    cdef const unsigned char *buf
    cdef Py_ssize_t n, i, k, glen
    cdef unsigned long long h
    if len(text) == 0:
        return vec
    data = text.encode("utf-8")
    n = len(data)
    if n != len(text):
        # Non-ASCII input: gram boundaries are per character, not per byte.
        from rpkg.kernels import _pure
        return _pure.embed_accumulate(text)
    buf = data
    glen = n if n < 3 else 3
    for i in range(n - glen + 1):
        h = FNV_OFFSET
        for k in range(glen):
            h = (h ^ <unsigned long long> buf[i + k]) * FNV_PRIME
        if h >> 63:
            vec[h % 256] -= 1.0
        else:
            vec[h % 256] += 1.0
    return vec
