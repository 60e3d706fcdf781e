"""Append-only JSON-lines article store with an in-memory index.

Each line is either an article event or a label event; the index is
rebuilt by replaying the file at startup. Adequate at desk scale and
trivially inspectable. Mutations are serialized by a lock; reads hand
out immutable snapshots.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from .aggregate import Keyphrase
from .corpus import Category, Document


@dataclass
class LabelResult:
    category: Category
    category_scores: dict[Category, float]
    tags: list[Keyphrase]
    elapsed_ms: float


@dataclass
class ArticleRecord:
    doc: Document
    raw: dict
    label: LabelResult | None = None
    vector: dict[str, float] | None = None
    labeled_at: datetime | None = None


def _label_to_json(label: LabelResult) -> dict:
    return {
        "category": label.category.value,
        "category_scores": {c.value: s for c, s in label.category_scores.items()},
        "tags": [
            {
                "surface": kp.surface,
                "normalized": kp.normalized,
                "key": kp.key,
                "score": kp.score,
                "method": kp.method,
                "first_pos": kp.first_pos,
            }
            for kp in label.tags
        ],
        "elapsed_ms": label.elapsed_ms,
    }


def _label_from_json(payload: dict) -> LabelResult:
    return LabelResult(
        category=Category(payload["category"]),
        category_scores={Category(c): s for c, s in payload["category_scores"].items()},
        tags=[
            Keyphrase(
                surface=t["surface"],
                normalized=t["normalized"],
                key=t["key"],
                score=t["score"],
                method=t["method"],
                first_pos=t["first_pos"],
            )
            for t in payload["tags"]
        ],
        elapsed_ms=payload["elapsed_ms"],
    )


class ArticleStore:
    """Single-writer/multi-reader store; path=None keeps it memory-only."""

    def __init__(self, path: str | Path | None = None):
        self._lock = threading.Lock()
        self._records: dict[str, ArticleRecord] = {}
        self._order: list[str] = []
        self._path = Path(path) if path else None
        if self._path and self._path.exists():
            self._replay()

    def _replay(self) -> None:
        from .service import document_from_article  # local import to avoid a cycle

        for line in self._path.read_text(encoding="utf-8").splitlines():
            if not line.strip():
                continue
            event = json.loads(line)
            if event["type"] == "article":
                doc = document_from_article(event["article"])
                if doc.id not in self._records:
                    self._records[doc.id] = ArticleRecord(doc=doc, raw=event["article"])
                    self._order.append(doc.id)
            elif event["type"] == "label":
                record = self._records.get(event["id"])
                if record is not None:
                    record.label = _label_from_json(event["label"])
                    record.vector = event["vector"]
                    record.labeled_at = datetime.fromisoformat(event["labeled_at"])

    def _append(self, event: dict) -> None:
        if self._path is None:
            return
        with self._path.open("a", encoding="utf-8") as f:
            f.write(json.dumps(event, sort_keys=True) + "\n")

    def add_article(self, doc: Document, raw: dict) -> bool:
        """Store a new article; returns False when the id already exists."""
        with self._lock:
            if doc.id in self._records:
                return False
            self._records[doc.id] = ArticleRecord(doc=doc, raw=raw)
            self._order.append(doc.id)
            self._append({"type": "article", "article": raw})
            return True

    def add_batch(self, pairs: list[tuple[Document, dict]]) -> tuple[int, int]:
        """Atomically store a validated batch; duplicate ids are skipped."""
        stored = skipped = 0
        with self._lock:
            for doc, raw in pairs:
                if doc.id in self._records:
                    skipped += 1
                    continue
                self._records[doc.id] = ArticleRecord(doc=doc, raw=raw)
                self._order.append(doc.id)
                self._append({"type": "article", "article": raw})
                stored += 1
        return stored, skipped

    def set_label(
        self, article_id: str, label: LabelResult, vector: dict[str, float]
    ) -> None:
        with self._lock:
            record = self._records[article_id]
            record.label = label
            record.vector = vector
            record.labeled_at = datetime.now(timezone.utc)
            self._append(
                {
                    "type": "label",
                    "id": article_id,
                    "label": _label_to_json(label),
                    "vector": vector,
                    "labeled_at": record.labeled_at.isoformat(),
                }
            )

    def get(self, article_id: str) -> ArticleRecord | None:
        with self._lock:
            return self._records.get(article_id)

    def ids(self) -> list[str]:
        with self._lock:
            return list(self._order)

    def records(self) -> list[ArticleRecord]:
        with self._lock:
            return [self._records[i] for i in self._order]

    def __len__(self) -> int:
        with self._lock:
            return len(self._records)
