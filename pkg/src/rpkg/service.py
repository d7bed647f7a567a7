"""HTTP API over a frozen graph, plus static assets for the browser UI.

The graph is loaded once and shared read-only by all request handlers, so
concurrent searches are safe and identical requests return identical bodies.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, ConfigDict

from rpkg.embedding import EmbeddingProvider, default_provider
from rpkg.errors import PackageNotFoundError, QueryError, RpkgError
from rpkg.graph import Graph, package_view, stats
from rpkg.search import WeightConfig, ffs, parse_query


class SearchRequest(BaseModel):
    """The flat query template; unknown keys are rejected to catch typos."""

    model_config = ConfigDict(extra="forbid")

    robot: str | None = None
    sensor: str | None = None
    category: str | None = None
    function: str | None = None
    characteristics: list[str] | str | None = None
    action: str | None = None
    node: str | None = None
    service: str | None = None
    message: str | None = None
    launch: str | None = None
    top_k: int = 20


def create_app(
    graph: Graph,
    provider: EmbeddingProvider | None = None,
    weights: WeightConfig | None = None,
    static_dir: str | None = None,
) -> FastAPI:
    provider = provider or default_provider()
    weights = weights or WeightConfig()
    app = FastAPI(title="rpkg", docs_url=None, redoc_url=None)

    @app.exception_handler(RequestValidationError)
    def invalid_request(request: Request, exc: RequestValidationError) -> JSONResponse:
        # Malformed bodies (unknown keys, wrong types) are client errors.
        return JSONResponse(status_code=400, content={"error": str(exc.errors())})

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.post("/api/search")
    def api_search(req: SearchRequest) -> JSONResponse:
        fields = req.model_dump(exclude={"top_k"}, exclude_none=True)
        try:
            query = parse_query(fields)
            results = ffs(graph, query, weights, max(req.top_k, 1), provider)
        except QueryError as exc:
            return JSONResponse(status_code=400, content={"error": str(exc)})
        except RpkgError as exc:
            return JSONResponse(status_code=500, content={"error": str(exc)})
        return JSONResponse(content={"results": [r.to_json() for r in results]})

    @app.get("/api/packages/{name}")
    def api_package(name: str) -> JSONResponse:
        try:
            features = package_view(graph, name)
        except PackageNotFoundError:
            return JSONResponse(status_code=404, content={"error": "not found"})
        return JSONResponse(content=features.to_json())

    @app.get("/api/stats")
    def api_stats() -> dict:
        return stats(graph)

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
