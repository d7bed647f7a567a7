"""Exception hierarchy shared across the package."""


class RpkgError(Exception):
    """Base class for all errors raised by this package."""


class IngestionError(RpkgError):
    """Corpus root, manifest, or package.xml could not be ingested."""


class VocabularyError(RpkgError):
    """Hardware vocabulary file is malformed or inconsistent."""


class GraphError(RpkgError):
    """Graph construction, persistence, or integrity failure."""


class PackageNotFoundError(GraphError):
    """Requested package does not exist in the graph."""


class DimensionMismatchError(RpkgError):
    """Two embedding vectors of different dimensions were compared."""


class QueryError(RpkgError):
    """Search query is empty or otherwise unsatisfiable."""


class EvalError(RpkgError):
    """Evaluation input (query set, sampling, ablation) is invalid."""
