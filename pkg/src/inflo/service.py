"""Pipeline orchestration, feed ingestion and the labeling engine.

label_pipeline runs predict -> three extractors -> tag aggregation with
the predicted category's DF tables (the category conditioning is the
observable contract). The engine adds lazy per-article labeling with
single-flight computation, metrics counters, and atomic feed ingestion.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import dataclass
from datetime import datetime

import requests

from . import aggregate, classify, kpminer, mprank
from .corpus import Category, Document, MissingBody, ModelSet, ingest as ingest_article
from .store import ArticleRecord, ArticleStore, LabelResult


class ModelNotLoaded(RuntimeError):
    pass


class MalformedFeed(ValueError):
    pass


class AuthFailed(RuntimeError):
    pass


class RateLimited(RuntimeError):
    def __init__(self, message: str, retry_after: float | None = None):
        super().__init__(message)
        self.retry_after = retry_after


class UpstreamError(RuntimeError):
    pass


@dataclass(frozen=True)
class PipelineParams:
    kp: kpminer.KpParams = kpminer.KpParams()
    mp_alpha: float = mprank.PROMOTE_ALPHA
    mp_damping: float = mprank.DAMPING
    mp_threshold: float = mprank.JACCARD_THRESHOLD
    top_k: int = 5
    max_tags: int = 10


def document_from_article(record: dict) -> Document:
    """Article JSON -> Document (shared by ingestion and store replay)."""
    return ingest_article(record)


def label_pipeline(
    doc: Document,
    models: ModelSet | None,
    clf: classify.ClassifierModel | None,
    params: PipelineParams = PipelineParams(),
    lexicon: aggregate.NounLexicon | None = None,
) -> LabelResult:
    """Predict the category, then run all three extractors against that
    category's DF tables and aggregate the tags."""
    if models is None or clf is None:
        raise ModelNotLoaded("DF model set and classifier must be loaded")
    started = time.perf_counter()
    category, scores = classify.predict(doc, clf)
    kp_params = kpminer.KpParams(
        lasf=params.kp.lasf,
        cutoff=params.kp.cutoff,
        boost_alpha=params.kp.boost_alpha,
        boost_sigma=params.kp.boost_sigma,
        top_k=params.top_k,
    )
    phrases = kpminer.extract_phrases(doc, models, category, kp_params)
    entity_phrases = kpminer.extract_entity_keyphrases(doc, models, category, kp_params)
    topics = mprank.extract_topics(
        doc,
        top_k=params.top_k,
        alpha=params.mp_alpha,
        damping=params.mp_damping,
        threshold=params.mp_threshold,
    )
    tags = aggregate.aggregate_tags(
        phrases, entity_phrases, topics, lexicon, max_tags=params.max_tags
    )
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    return LabelResult(
        category=category,
        category_scores=scores,
        tags=tags,
        elapsed_ms=elapsed_ms,
    )


class Metrics:
    def __init__(self):
        self._lock = threading.Lock()
        self.counters = {"labels_computed": 0, "cache_hits": 0, "ingest_errors": 0}

    def increment(self, name: str, by: int = 1) -> None:
        with self._lock:
            self.counters[name] += by

    def snapshot(self) -> dict[str, int]:
        with self._lock:
            return dict(self.counters)

    def render(self) -> str:
        snap = self.snapshot()
        return "".join(f"{name} {value}\n" for name, value in sorted(snap.items()))


class Engine:
    """Shared state behind the HTTP surface and the CLI."""

    def __init__(
        self,
        models: ModelSet | None,
        classifier: classify.ClassifierModel | None,
        store: ArticleStore,
        params: PipelineParams = PipelineParams(),
        lexicon: aggregate.NounLexicon | None = None,
        prelabel: bool = False,
    ):
        self.models = models
        self.classifier = classifier
        self.store = store
        self.params = params
        self.lexicon = lexicon or aggregate.default_lexicon()
        self.prelabel = prelabel
        self.metrics = Metrics()
        self._flight_lock = threading.Lock()
        self._in_flight: dict[str, threading.Lock] = {}

    @property
    def ready(self) -> bool:
        return self.models is not None and self.classifier is not None

    def label_text(self, title: str, body: str) -> LabelResult:
        from .corpus import build_document

        doc = build_document(title=title, body=body)
        self.metrics.increment("labels_computed")
        return label_pipeline(doc, self.models, self.classifier, self.params, self.lexicon)

    def label_article(self, article_id: str) -> ArticleRecord:
        """Lazy-label with per-article single-flight; cached labels are reused."""
        record = self.store.get(article_id)
        if record is None:
            raise KeyError(article_id)
        if record.label is not None:
            self.metrics.increment("cache_hits")
            return record
        with self._flight_lock:
            gate = self._in_flight.setdefault(article_id, threading.Lock())
        with gate:
            record = self.store.get(article_id)
            if record.label is not None:
                self.metrics.increment("cache_hits")
                return record
            result = label_pipeline(
                record.doc, self.models, self.classifier, self.params, self.lexicon
            )
            vector = aggregate.key_vector(result.tags)
            self.store.set_label(article_id, result, vector)
            self.metrics.increment("labels_computed")
        with self._flight_lock:
            self._in_flight.pop(article_id, None)
        return self.store.get(article_id)

    def ingest_feed(self, payload) -> tuple[int, int]:
        """Validate the whole feed, then store new articles atomically.

        Raises MalformedFeed (store untouched) on structural problems;
        per-article MissingBody skips the article and counts an error.
        """
        if isinstance(payload, (str, bytes)):
            try:
                payload = json.loads(payload)
            except json.JSONDecodeError as exc:
                raise MalformedFeed(f"feed is not valid JSON: {exc}") from exc
        if not isinstance(payload, dict) or not isinstance(payload.get("articles"), list):
            raise MalformedFeed('feed must be an object with an "articles" array')
        validated: list[tuple[Document, dict]] = []
        skipped_bad = 0
        for item in payload["articles"]:
            if not isinstance(item, dict):
                raise MalformedFeed("articles must be JSON objects")
            try:
                doc = document_from_article(item)
            except MissingBody:
                skipped_bad += 1
                continue
            except (ValueError, KeyError, TypeError) as exc:
                raise MalformedFeed(f"unparseable article: {exc}") from exc
            validated.append((doc, item))
        if skipped_bad:
            self.metrics.increment("ingest_errors", skipped_bad)
        stored, dup = self.store.add_batch(validated)
        if self.prelabel and self.ready:
            for doc, _ in validated:
                try:
                    self.label_article(doc.id)
                except KeyError:
                    pass
        return stored, dup + skipped_bad

    def related(self, article_id: str, k: int) -> list[tuple[ArticleRecord, float]]:
        """Cosine neighbors over the labeled snapshot; labels the query lazily."""
        record = self.label_article(article_id)
        if record.vector is None or not record.vector:
            return []
        index = [
            (r.doc.id, r.vector)
            for r in self.store.records()
            if r.vector is not None and r.vector
        ]
        hits = aggregate.related(record.vector, index, k, exclude_id=article_id)
        out = []
        for hit_id, similarity in hits:
            hit = self.store.get(hit_id)
            if hit is not None:
                out.append((hit, similarity))
        return out

    def list_articles(
        self,
        category: Category | None = None,
        tag: str | None = None,
        limit: int = 50,
        offset: int = 0,
    ) -> tuple[list[ArticleRecord], int]:
        records = self.store.records()
        if category is not None:
            records = [
                r for r in records if r.label is not None and r.label.category == category
            ]
        if tag is not None:
            needle = tag.strip().lower()
            records = [
                r
                for r in records
                if r.label is not None
                and any(
                    needle in (kp.normalized, kp.key, kp.surface.lower())
                    for kp in r.label.tags
                )
            ]
        total = len(records)
        return records[offset : offset + limit], total


def fetch_remote_feed(
    endpoint_url: str,
    api_key: str,
    timeout: float = 10.0,
    backoff: tuple[float, ...] = (1.0, 2.0, 4.0),
    session: requests.Session | None = None,
) -> dict:
    """GET the upstream feed with retries on 5xx/timeouts.

    401/403 raise AuthFailed immediately; 429 raises RateLimited with the
    server's retry-after when present.
    """
    http = session or requests.Session()
    attempts = len(backoff) + 1
    last_error: Exception | None = None
    for attempt in range(attempts):
        try:
            response = http.get(
                endpoint_url, headers={"X-Api-Key": api_key}, timeout=timeout
            )
        except (requests.Timeout, requests.ConnectionError) as exc:
            last_error = exc
            if attempt < len(backoff):
                time.sleep(backoff[attempt])
                continue
            raise UpstreamError(f"feed unreachable after {attempts} attempts: {exc}") from exc
        if response.status_code in (401, 403):
            raise AuthFailed(f"feed rejected the API key (HTTP {response.status_code})")
        if response.status_code == 429:
            retry_after = response.headers.get("Retry-After")
            raise RateLimited(
                "feed rate limit hit",
                retry_after=float(retry_after) if retry_after else None,
            )
        if response.status_code >= 500:
            last_error = UpstreamError(f"HTTP {response.status_code}")
            if attempt < len(backoff):
                time.sleep(backoff[attempt])
                continue
            raise UpstreamError(
                f"feed failed after {attempts} attempts (HTTP {response.status_code})"
            )
        if response.status_code != 200:
            raise UpstreamError(f"unexpected feed response: HTTP {response.status_code}")
        try:
            return response.json()
        except ValueError as exc:
            raise MalformedFeed(f"feed body is not JSON: {exc}") from exc
    raise UpstreamError(f"feed failed: {last_error}")
