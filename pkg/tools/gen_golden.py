"""Freeze the golden label outputs for the fixture corpus.

Builds the fixture DF tables and classifier exactly as tests/conftest.py
does, labels the 25 golden articles, and writes the canonical JSON
(timing excluded) to tests/fixtures/golden_labels.json. The regression
test compares fresh runs against this file byte for byte.

Run from the repository root: python tools/gen_golden.py
"""

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from inflo import classify, corpus, service  # noqa: E402
from inflo.api import label_result_json  # noqa: E402

FIXTURES = ROOT / "tests" / "fixtures"


def main() -> None:
    training = [
        corpus.ingest(r)
        for r in json.loads((FIXTURES / "training_feed.json").read_text())["articles"]
    ]
    golden = [
        corpus.ingest(r)
        for r in json.loads((FIXTURES / "golden_feed.json").read_text())["articles"]
    ]
    by_category = {}
    for doc in training:
        by_category.setdefault(doc.category, []).append(doc)
    models = corpus.build_model_set(by_category)
    vocab = classify.build_vocab(training, min_df=2)
    clf = classify.train(training, vocab)
    out = []
    for doc in golden:
        result = service.label_pipeline(doc, models, clf)
        out.append({"id": doc.id, **label_result_json(result, include_timing=False)})
    path = FIXTURES / "golden_labels.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print(f"wrote {len(out)} golden labels to {path}")


if __name__ == "__main__":
    main()
