"""Fuzzy string matching: edit distance and its 0-100 normalized similarity."""

from rpkg.kernels import levenshtein

__all__ = ["levenshtein", "similarity_ratio"]


def similarity_ratio(a: str, b: str) -> int:
    """Length-normalized Levenshtein similarity on lowercased inputs.

    100 * (1 - distance / max_len), rounded half away from zero; 100 iff the
    strings are equal ignoring case. Pure integer arithmetic so the result is
    platform-independent.
    """
    la = a.lower()
    lb = b.lower()
    m = max(len(la), len(lb), 1)
    d = levenshtein(la, lb)
    return (200 * (m - d) + m) // (2 * m)
