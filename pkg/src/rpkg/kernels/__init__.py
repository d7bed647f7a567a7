"""Kernel selection: compiled extension when built, pure Python otherwise.

Set RPKG_PURE=1 to force the pure-Python kernels (used by the benchmark and
for debugging).
"""

import os

if os.environ.get("RPKG_PURE") == "1":
    from rpkg.kernels import _pure as _impl
else:
    try:
        from rpkg.kernels import _speedups as _impl  # type: ignore[no-redef]
    except ImportError:
        from rpkg.kernels import _pure as _impl  # type: ignore[no-redef]

BACKEND: str = _impl.BACKEND
EMBED_DIM: int = _impl.EMBED_DIM
levenshtein = _impl.levenshtein
embed_accumulate = _impl.embed_accumulate

__all__ = ["BACKEND", "EMBED_DIM", "levenshtein", "embed_accumulate"]
