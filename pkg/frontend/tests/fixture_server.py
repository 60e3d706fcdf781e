"""Fixture-backed service instance for the UI contract tests.

Builds the fixture DF tables and classifier from the repository test
fixtures, pre-ingests the golden feed, and serves the real HTTP API on
the given port. Started by the vitest globalSetup.
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(ROOT / "src"))

import uvicorn  # noqa: E402

from inflo import classify, corpus, service  # noqa: E402
from inflo.api import create_app  # noqa: E402
from inflo.store import ArticleStore  # noqa: E402


def main() -> None:
    port = int(sys.argv[1])
    fixtures = ROOT / "tests" / "fixtures"
    training = [
        corpus.ingest(record)
        for record in json.loads((fixtures / "training_feed.json").read_text())["articles"]
    ]
    by_category = {}
    for doc in training:
        by_category.setdefault(doc.category, []).append(doc)
    models = corpus.build_model_set(by_category)
    clf = classify.train(training, classify.build_vocab(training))
    engine = service.Engine(models, clf, ArticleStore())
    engine.ingest_feed(json.loads((fixtures / "golden_feed.json").read_text()))
    dist = ROOT / "frontend" / "dist"
    app = create_app(engine, static_dir=dist if dist.is_dir() else None)
    uvicorn.run(app, host="127.0.0.1", port=port, log_level="warning")


if __name__ == "__main__":
    main()
