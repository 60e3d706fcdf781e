"""HTTP surface consumed by the reader UI and external clients."""

from __future__ import annotations

from pathlib import Path

from fastapi import Body, FastAPI, HTTPException, Query, Response
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .corpus import CATEGORIES, Category
from .service import Engine, MalformedFeed, ModelNotLoaded
from .store import ArticleRecord, LabelResult


def label_result_json(result: LabelResult, include_timing: bool = True) -> dict:
    payload = {
        "category": result.category.value,
        "category_scores": {c.value: s for c, s in sorted(result.category_scores.items(), key=lambda item: item[0].value)},
        "tags": [
            {
                "surface": kp.surface,
                "normalized": kp.normalized,
                "score": kp.score,
                "method": kp.method,
            }
            for kp in result.tags
        ],
    }
    if include_timing:
        payload["elapsed_ms"] = result.elapsed_ms
    return payload


def _summary_json(record: ArticleRecord) -> dict:
    payload = {
        "id": record.doc.id,
        "title": record.doc.title,
        "source": record.doc.source,
        "published_at": record.doc.published_at.isoformat(),
    }
    if record.label is not None:
        payload["category"] = record.label.category.value
        payload["tags"] = [
            {
                "surface": kp.surface,
                "normalized": kp.normalized,
                "score": kp.score,
                "method": kp.method,
            }
            for kp in record.label.tags
        ]
    return payload


def _parse_category(raw: str | None) -> Category | None:
    if raw is None or raw == "":
        return None
    try:
        return Category(raw)
    except ValueError:
        raise HTTPException(status_code=400, detail=f"unknown category {raw!r}")


def create_app(engine: Engine, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="inflo", docs_url=None, redoc_url=None)

    @app.get("/healthz", response_class=PlainTextResponse)
    def healthz() -> str:
        return "ok"

    @app.get("/v1/categories")
    def categories() -> list[str]:
        return [c.value for c in CATEGORIES]

    @app.get("/v1/articles")
    def list_articles(
        category: str | None = None,
        tag: str | None = None,
        limit: int = Query(default=50, ge=1, le=500),
        offset: int = Query(default=0, ge=0),
    ) -> dict:
        parsed = _parse_category(category)
        records, total = engine.list_articles(parsed, tag, limit, offset)
        return {
            "articles": [_summary_json(r) for r in records],
            "total": total,
            "limit": limit,
            "offset": offset,
        }

    @app.get("/v1/articles/{article_id}")
    def article_detail(article_id: str) -> dict:
        if not engine.ready:
            raise HTTPException(status_code=503, detail="models not loaded")
        try:
            record = engine.label_article(article_id)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown article id")
        payload = _summary_json(record)
        payload["url"] = record.doc.url
        payload["body"] = record.doc.body
        if record.label is not None:
            payload["category_scores"] = {
                c.value: s for c, s in sorted(record.label.category_scores.items(), key=lambda item: item[0].value)
            }
            payload["elapsed_ms"] = record.label.elapsed_ms
            payload["labeled_at"] = record.labeled_at.isoformat() if record.labeled_at else None
        return payload

    @app.post("/v1/label")
    def label(payload: dict = Body(...)) -> dict:
        if not engine.ready:
            raise HTTPException(status_code=503, detail="models not loaded")
        title = payload.get("title") or ""
        body = payload.get("body") or ""
        if not body:
            raise HTTPException(status_code=400, detail="body is required")
        result = engine.label_text(title, body)
        return label_result_json(result)

    @app.get("/v1/articles/{article_id}/related")
    def related(article_id: str, k: int = Query(default=5, ge=1, le=50)) -> list[dict]:
        if not engine.ready:
            raise HTTPException(status_code=503, detail="models not loaded")
        try:
            hits = engine.related(article_id, k)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown article id")
        return [
            {"id": record.doc.id, "title": record.doc.title, "similarity": similarity}
            for record, similarity in hits
        ]

    @app.post("/v1/ingest")
    def ingest(payload: dict = Body(...)) -> dict:
        try:
            stored, skipped = engine.ingest_feed(payload)
        except MalformedFeed as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"stored": stored, "skipped": skipped}

    @app.get("/metrics", response_class=PlainTextResponse)
    def metrics() -> str:
        return engine.metrics.render()

    @app.exception_handler(ModelNotLoaded)
    def model_not_loaded(_request, exc: ModelNotLoaded) -> Response:
        return PlainTextResponse(str(exc), status_code=503)

    @app.exception_handler(RequestValidationError)
    def invalid_parameters(_request, exc: RequestValidationError) -> Response:
        # the API contract uses 400 for bad parameters, not FastAPI's 422
        return JSONResponse({"detail": exc.errors()}, status_code=400)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
