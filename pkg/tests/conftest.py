import json
from pathlib import Path

import pytest

from inflo import classify, corpus

FIXTURES = Path(__file__).parent / "fixtures"


def load_feed_documents(name: str) -> list[corpus.Document]:
    payload = json.loads((FIXTURES / name).read_text(encoding="utf-8"))
    return [corpus.ingest(record) for record in payload["articles"]]


@pytest.fixture(scope="session")
def training_docs() -> list[corpus.Document]:
    return load_feed_documents("training_feed.json")


@pytest.fixture(scope="session")
def golden_docs() -> list[corpus.Document]:
    return load_feed_documents("golden_feed.json")


@pytest.fixture(scope="session")
def fixture_models(training_docs) -> corpus.ModelSet:
    by_category: dict[corpus.Category, list[corpus.Document]] = {}
    for doc in training_docs:
        by_category.setdefault(doc.category, []).append(doc)
    return corpus.build_model_set(by_category)


@pytest.fixture(scope="session")
def fixture_classifier(training_docs) -> classify.ClassifierModel:
    vocab = classify.build_vocab(training_docs, min_df=2)
    return classify.train(training_docs, vocab)


@pytest.fixture(scope="session")
def kpminer_docs() -> list[corpus.Document]:
    payload = json.loads((FIXTURES / "kpminer_docs.json").read_text(encoding="utf-8"))
    return [
        corpus.build_document(title=item["title"], body=item["body"]) for item in payload
    ]
