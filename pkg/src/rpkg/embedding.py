"""Phrase embeddings behind a three-tier provider chain.

Tier order is fixed: precomputed store, then an optional remote service, then
the deterministic signed-trigram fallback. The fallback is bit-exactly
specified (FNV-1a 64 hashing) so rankings reproduce across platforms and
languages.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass, field

from rpkg.errors import DimensionMismatchError, RpkgError
from rpkg.kernels import EMBED_DIM, embed_accumulate

log = logging.getLogger(__name__)

STORE_HEADER = re.compile(r"^rpkg-emb v1 dim=(\d+)$")

_NON_ALNUM = re.compile(r"[^a-z0-9]+")


def normalize_text(s: str) -> str:
    """Lowercase, non-alphanumerics to spaces, runs collapsed, trimmed."""
    return _NON_ALNUM.sub(" ", s.lower()).strip()


def fallback_embed(s: str) -> list[float]:
    """Deterministic trigram-hash embedding of the normalized text.

    Empty normalized text gives the zero vector; otherwise the accumulated
    signed-trigram counts, L2-normalized.
    """
    vec = embed_accumulate(normalize_text(s))
    norm = math.sqrt(sum(x * x for x in vec))
    if norm > 0:
        vec = [x / norm for x in vec]
    return vec


def cosine(u: list[float], v: list[float]) -> float:
    """dot(u, v) / (|u| |v|); 0 when either vector has zero norm."""
    if len(u) != len(v):
        raise DimensionMismatchError(
            f"embedding dimensions differ: {len(u)} vs {len(v)}"
        )
    dot = sum(a * b for a, b in zip(u, v))
    nu = math.sqrt(sum(a * a for a in u))
    nv = math.sqrt(sum(b * b for b in v))
    if nu == 0 or nv == 0:
        return 0.0
    return dot / (nu * nv)


@dataclass
class EmbeddingStore:
    """Precomputed normalized-text -> vector mapping loaded from disk."""

    dim: int
    entries: dict[str, list[float]] = field(default_factory=dict)

    @classmethod
    def load(cls, path: str) -> "EmbeddingStore":
        try:
            fh = open(path, encoding="utf-8")
        except OSError as exc:
            raise RpkgError(f"embedding store not readable: {path}") from exc
        with fh:
            header = fh.readline().rstrip("\n")
            match = STORE_HEADER.match(header)
            if not match:
                raise RpkgError(f"bad embedding store header: {header!r}")
            dim = int(match.group(1))
            entries = {}
            for lineno, line in enumerate(fh, 2):
                if not line.strip():
                    continue
                key, _, rest = line.rstrip("\n").partition("\t")
                values = [float(x) for x in rest.split(" ") if x]
                if len(values) != dim:
                    raise RpkgError(
                        f"line {lineno}: expected {dim} floats, got {len(values)}"
                    )
                entries[key] = values
        return cls(dim=dim, entries=entries)

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(f"rpkg-emb v1 dim={self.dim}\n")
            for key in sorted(self.entries):
                vals = " ".join(repr(v) for v in self.entries[key])
                fh.write(f"{key}\t{vals}\n")

    def lookup(self, normalized: str) -> list[float] | None:
        return self.entries.get(normalized)


class EmbeddingProvider:
    """Store -> remote -> fallback, never fatal at query time."""

    def __init__(
        self,
        store: EmbeddingStore | None = None,
        remote_url: str | None = None,
        timeout: float = 5.0,
    ) -> None:
        self.store = store
        self.remote_url = remote_url.rstrip("/") if remote_url else None
        self.timeout = timeout
        self.tier_counts = {"store": 0, "remote": 0, "fallback": 0}
        self.last_tier: str | None = None
        self._remote_warned = False
        self._cache: dict[str, list[float]] = {}

    def embed(self, s: str) -> list[float]:
        normalized = normalize_text(s)
        cached = self._cache.get(normalized)
        if cached is not None:
            return cached
        vec, tier = self._embed_uncached(normalized)
        self.tier_counts[tier] += 1
        self.last_tier = tier
        self._cache[normalized] = vec
        return vec

    def _embed_uncached(self, normalized: str) -> tuple[list[float], str]:
        if self.store is not None:
            vec = self.store.lookup(normalized)
            if vec is not None:
                return vec, "store"
        if self.remote_url:
            vec = self._embed_remote(normalized)
            if vec is not None:
                return vec, "remote"
        return fallback_embed(normalized), "fallback"

    def _embed_remote(self, normalized: str) -> list[float] | None:
        import requests

        try:
            resp = requests.post(
                f"{self.remote_url}/embed",
                json={"texts": [normalized]},
                timeout=self.timeout,
            )
            resp.raise_for_status()
            vectors = resp.json()["vectors"]
            return [float(x) for x in vectors[0]]
        except Exception as exc:  # degrade, never fail a query
            if not self._remote_warned:
                log.warning("remote embedder failed, using fallback: %s", exc)
                self._remote_warned = True
            return None


_DEFAULT_PROVIDER = EmbeddingProvider()


def default_provider() -> EmbeddingProvider:
    """Shared store-less provider (fallback embeddings only)."""
    return _DEFAULT_PROVIDER
