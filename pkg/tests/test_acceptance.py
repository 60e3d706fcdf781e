"""Acceptance suite: one test per acceptance criterion, stated tolerances.

Run `pytest -s tests/test_acceptance.py` to see one [ACCEPTANCE] line per
criterion.
"""

import json
import math
import random
import statistics
import time
from contextlib import contextmanager
from pathlib import Path

import numpy as np
import pytest
from fastapi.testclient import TestClient

from inflo import aggregate, classify, corpus, kpminer, mprank, service
from inflo.api import create_app, label_result_json
from inflo.corpus import Category, DfTable, KIND_PHRASE
from inflo.store import ArticleStore
from oracles import brute_force_phrase_scores, cosine, stationary_solve

FIXTURES = Path(__file__).parent / "fixtures"


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[ACCEPTANCE] {name}: FAIL", flush=True)
        raise
    print(f"[ACCEPTANCE] {name}: PASS", flush=True)


# --- 1. entity-UNK ablation ------------------------------------------------

ABLATION_PLAN = [
    (Category.InternationalRelations, ["GPE"] * 5 + ["PERSON"]),
    (Category.Entertainment, ["PERSON"] * 5 + ["PRODUCT"]),
    (Category.Technology, ["PRODUCT"] * 5 + ["GPE"]),
]

_FILLER = "officials described the gathering near the border after the summit"


def _ablation_corpus():
    """600 documents whose category is determined solely by the mixture of
    entity types; every entity surface form is globally unique."""
    docs = []
    serial = 0
    for category, labels in ABLATION_PLAN:
        for i in range(200):
            words = _FILLER.split()
            entities = []
            positions = [1, 3, 5, 7, 8, 9]
            tokens = list(words)
            offset = 0
            for k, label in enumerate(labels):
                name = f"xq{serial}zz"
                serial += 1
                insert_at = positions[k] + offset
                tokens.insert(insert_at, name)
                entities.append(
                    {"start_token": insert_at, "end_token": insert_at + 1, "label": label}
                )
                offset += 1
            docs.append(corpus.ingest({
                "title": "",
                "content": " ".join(tokens),
                "category": category.value,
                "entities": entities,
            }))
    return docs


def test_entity_unk_ablation():
    with criterion("entity-unk-ablation"):
        started = time.perf_counter()
        docs = _ablation_corpus()
        assert len(docs) == 600
        train_docs, _, test_docs = corpus.split(docs, seed=7)
        train_surfaces = {
            m.surface for d in train_docs for m in d.entities
        }
        for doc in test_docs:
            for mention in doc.entities:
                assert mention.surface not in train_surfaces
        vocab = classify.build_vocab(train_docs, min_df=2)
        aware = classify.train(train_docs, vocab, entity_aware=True)
        plain = classify.train(train_docs, vocab, entity_aware=False)
        aware_acc = classify.evaluate(test_docs, aware)["accuracy"]
        plain_acc = classify.evaluate(test_docs, plain)["accuracy"]
        elapsed = time.perf_counter() - started
        print(f"  entity-UNK accuracy {aware_acc:.3f}, plain-UNK {plain_acc:.3f}, "
              f"{elapsed:.2f}s", flush=True)
        assert aware_acc >= 0.90
        assert plain_acc <= 0.45
        assert elapsed < 5.0


# --- 2. classifier sanity ---------------------------------------------------

def _separable_corpus():
    letters = "abcdefghijkl"
    docs = []
    for cat_idx, category in enumerate(corpus.CATEGORIES):
        prefix = letters[cat_idx]
        words = [f"{prefix}{suffix}zz" for suffix in "qwertyuiop"]
        for i in range(50):
            docs.append(corpus.build_document(
                title="", body=" ".join(words), category=category,
                url=f"sep://{category.value}/{i}",
            ))
    return docs


def test_classifier_sanity():
    with criterion("classifier-sanity"):
        docs = _separable_corpus()
        train_docs, valid_docs, test_docs = corpus.split(docs, seed=11)
        assert (len(train_docs), len(valid_docs), len(test_docs)) == (480, 60, 60)
        vocab = classify.build_vocab(train_docs, min_df=2)
        model = classify.train(train_docs, vocab, smoothing=1.0)
        accuracy = classify.evaluate(test_docs, model)["accuracy"]
        assert accuracy == 1.0
        # hand-computed smoothed values: 40 train docs per category, each
        # containing its 10 category words once
        vocab_size = 12 * 10 + len(classify.RESERVED_TOKENS)
        assert len(vocab) == vocab_size
        expected_prior = math.log(40 / 480)
        expected_own = math.log((40 + 1) / (400 + vocab_size))
        expected_other = math.log(1 / (400 + vocab_size))
        for cat_idx, category in enumerate(corpus.CATEGORIES):
            assert model.log_prior[category] == pytest.approx(expected_prior, abs=1e-9)
            own_token = f"{'abcdefghijkl'[cat_idx]}qzz"
            other_token = f"{'abcdefghijkl'[(cat_idx + 1) % 12]}qzz"
            assert model.log_likelihood[category][own_token] == pytest.approx(
                expected_own, abs=1e-9
            )
            assert model.log_likelihood[category][other_token] == pytest.approx(
                expected_other, abs=1e-9
            )


# --- 3. KP-Miner oracle -----------------------------------------------------

def test_kpminer_oracle(kpminer_docs):
    with criterion("kpminer-oracle"):
        params = kpminer.KpParams()
        assert len(kpminer_docs) == 20
        rng = random.Random(13)
        for doc in kpminer_docs:
            assert len(doc.tokens) <= 60
            keys = sorted({c.key for c in kpminer.select_candidates(doc.tokens)})
            counts = {key: rng.randint(1, 5) for key in keys if rng.random() < 0.5}
            table = DfTable(category=Category.World, kind=KIND_PHRASE,
                            n_docs=6, counts=counts)
            mine = kpminer.score_phrases(doc.tokens, table, params)
            oracle = brute_force_phrase_scores(
                doc.tokens, table, lasf=params.lasf, cutoff=params.cutoff,
                alpha=params.boost_alpha, sigma=params.boost_sigma,
            )
            assert [(c.key, s) for c, s in mine] == [
                (key, score) for key, _, _, score in oracle
            ]
            multi = [(c, s) for c, s in mine if len(c.words) >= 2][: params.top_k]
            tables = {}
            for cat in corpus.CATEGORIES:
                for kind in corpus.KINDS:
                    tables[(cat, kind)] = DfTable(cat, kind, 0, {})
            tables[(Category.World, KIND_PHRASE)] = table
            kps = kpminer.extract_phrases(
                doc, corpus.ModelSet(tables=tables), Category.World, params
            )
            assert [(k.key, k.score) for k in kps] == [(c.key, s) for c, s in multi]
            for item in kps:
                assert len(item.surface.split()) >= 2


# --- 4. MultipartiteRank oracle ----------------------------------------------

def _fixture_graphs(kpminer_docs):
    graphs = []
    for doc in kpminer_docs:
        cands = mprank.select_np_candidates(doc.tokens)
        if not 1 <= len(cands) <= 6:
            continue
        topics = mprank.cluster_topics(cands)
        graph = mprank.build_graph(cands, topics)
        graphs.append((mprank.promote_first(graph, topics, cands), topics))
    return graphs


def test_mprank_oracle(kpminer_docs):
    with criterion("mprank-oracle"):
        graphs = _fixture_graphs(kpminer_docs)
        assert len(graphs) >= 8
        for graph, topics in graphs:
            scores = mprank.rank(graph, tol=1e-14, max_iter=1000)
            exact = stationary_solve(graph.weights, damping=0.85)
            worst = max(
                abs(scores[key] - exact[k]) for k, key in enumerate(graph.nodes)
            )
            assert worst < 1e-6
            assert sum(scores.values()) == pytest.approx(1.0, abs=1e-6)
            index = {key: k for k, key in enumerate(graph.nodes)}
            for topic in topics:
                members = [index[key] for key in topic.members]
                for i in members:
                    for j in members:
                        assert graph.weights[i, j] == 0.0


# --- 5. nounification fixtures ------------------------------------------------

def test_nounification_fixtures():
    with criterion("nounification-fixtures"):
        lexicon = aggregate.default_lexicon()
        assert aggregate.nounify("elect", lexicon) == "election"
        assert aggregate.nounify("italians", lexicon) == "italy"
        pairs = [
            line.split("\t")
            for line in (FIXTURES / "nounify_pairs.tsv").read_text().splitlines()
        ]
        assert len(pairs) == 50
        for word, expected in pairs:
            got = aggregate.nounify(word, lexicon)
            assert got == expected, (word, got, expected)
            assert aggregate.nounify(got, lexicon) == got, word


# --- 6. dedup properties --------------------------------------------------------

def test_dedup_properties():
    with criterion("dedup-properties"):
        lexicon = aggregate.default_lexicon()
        words = ["mill", "river", "copper", "barge", "harbor", "election",
                 "italian", "dog", "growth", "market", "treaty", "senate"]
        rng = random.Random(99)
        for _ in range(1000):
            batch = {"phrase": [], "entity": [], "topic": []}
            for _ in range(rng.randint(0, 10)):
                method = rng.choice(list(batch))
                surface = " ".join(rng.sample(words, rng.randint(1, 3)))
                raw = aggregate.Keyphrase(
                    surface=surface, normalized=surface, key="",
                    score=rng.random() * rng.choice([1, 10, 100]),
                    method=method, first_pos=rng.randrange(50),
                )
                batch[method].append(raw)
            tags = aggregate.aggregate_tags(
                batch["phrase"], batch["entity"], batch["topic"], lexicon
            )
            keys = [t.key for t in tags]
            assert len(keys) == len(set(keys))
            for a in tags:
                assert 0.0 <= a.score <= 1.0
                for b in tags:
                    if a is b:
                        continue
                    assert not (a.stem_set < b.stem_set and a.score <= b.score)


# --- 7. category conditioning ----------------------------------------------------

def test_category_conditioning(fixture_models, fixture_classifier, golden_docs):
    with criterion("category-conditioning"):
        sports_key = (Category.Sports, KIND_PHRASE)
        original = fixture_models.tables[sports_key]
        degraded = DfTable(
            category=Category.Sports, kind=KIND_PHRASE,
            n_docs=max(original.n_docs, 1),
            counts={k: max(original.n_docs, 1) for k in original.counts},
        )
        swapped = corpus.ModelSet(tables={**fixture_models.tables, sports_key: degraded})
        sports_changed = 0
        sports_seen = 0
        for doc in golden_docs:
            base = service.label_pipeline(doc, fixture_models, fixture_classifier)
            alt = service.label_pipeline(doc, swapped, fixture_classifier)
            assert base.category == alt.category
            base_tags = [(t.key, round(t.score, 12)) for t in base.tags]
            alt_tags = [(t.key, round(t.score, 12)) for t in alt.tags]
            if base.category == Category.Sports:
                sports_seen += 1
                if base_tags != alt_tags:
                    sports_changed += 1
            else:
                assert base_tags == alt_tags
        assert sports_seen > 0
        assert sports_changed > 0


# --- 8. determinism + latency -------------------------------------------------------

def _label_corpus_canonical(models, clf, docs):
    out = []
    for doc in docs:
        result = service.label_pipeline(doc, models, clf)
        out.append({"id": doc.id, **label_result_json(result, include_timing=False)})
    return json.dumps(out, sort_keys=True).encode("utf-8")


def test_determinism_and_latency(fixture_models, fixture_classifier, golden_docs):
    with criterion("determinism-and-latency"):
        runs = [
            _label_corpus_canonical(fixture_models, fixture_classifier, golden_docs)
            for _ in range(3)
        ]
        assert runs[0] == runs[1] == runs[2]

        sentences = []
        for record in json.loads((FIXTURES / "training_feed.json").read_text())["articles"]:
            sentences.append(record["content"])
        body = " ".join(sentences)
        words = body.split()[:1000]
        assert len(words) == 1000
        doc = corpus.build_document(title="Latency probe", body=" ".join(words))
        service.label_pipeline(doc, fixture_models, fixture_classifier)  # warm-up
        timings = []
        for _ in range(5):
            t0 = time.perf_counter()
            service.label_pipeline(doc, fixture_models, fixture_classifier)
            timings.append((time.perf_counter() - t0) * 1000.0)
        median = statistics.median(timings)
        print(f"  median label latency {median:.1f} ms over {len(timings)} runs", flush=True)
        assert median < 100.0


# --- 9. DF round-trip ----------------------------------------------------------------

def test_df_round_trip_and_additivity(fixture_models, training_docs, tmp_path):
    with criterion("df-round-trip"):
        corpus.save_models(fixture_models, tmp_path)
        loaded = corpus.load_models(tmp_path)
        for key, table in fixture_models.tables.items():
            assert loaded.tables[key].counts == table.counts
            assert loaded.tables[key].n_docs == table.n_docs
        first = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
        corpus.save_models(loaded, tmp_path)
        second = {p.name: p.read_bytes() for p in tmp_path.iterdir()}
        assert first == second

        docs = [d for d in training_docs if d.category == Category.Business]
        half = len(docs) // 2
        whole = corpus.build_phrase_df(docs, Category.Business)
        left = corpus.build_phrase_df(docs[:half], Category.Business)
        right = corpus.build_phrase_df(docs[half:], Category.Business)
        assert whole.n_docs == left.n_docs + right.n_docs
        assert set(whole.counts) == set(left.counts) | set(right.counts)
        for key in whole.counts:
            assert whole.counts[key] == left.counts.get(key, 0) + right.counts.get(key, 0)


# --- 10. service contract suite -------------------------------------------------------

def test_service_contract_suite(fixture_models, fixture_classifier):
    with criterion("service-contract-suite"):
        engine = service.Engine(fixture_models, fixture_classifier, ArticleStore())
        client = TestClient(create_app(engine))

        names = client.get("/v1/categories").json()
        assert len(names) == 12
        assert [Category(n).value for n in names] == names

        payload = json.loads((FIXTURES / "golden_feed.json").read_text())
        response = client.post("/v1/ingest", json=payload)
        assert response.json() == {"stored": 25, "skipped": 0}

        bad = client.post("/v1/ingest", json={"oops": 1})
        assert bad.status_code == 400
        assert len(engine.store) == 25

        article_id = engine.store.ids()[0]
        client.get(f"/v1/articles/{article_id}")
        metrics_before = engine.metrics.snapshot()
        client.get(f"/v1/articles/{article_id}")
        metrics_after = engine.metrics.snapshot()
        assert metrics_after["labels_computed"] == metrics_before["labels_computed"] == 1
        assert metrics_after["cache_hits"] == metrics_before["cache_hits"] + 1
        rendered = client.get("/metrics").text
        assert "labels_computed 1" in rendered

        for other in engine.store.ids()[:6]:
            client.get(f"/v1/articles/{other}")
        hits = client.get(f"/v1/articles/{article_id}/related", params={"k": 3}).json()
        vectors = {
            r.doc.id: r.vector for r in engine.store.records() if r.vector
        }
        expected = sorted(
            (
                (other, cosine(vectors[article_id], vec))
                for other, vec in vectors.items()
                if other != article_id
            ),
            key=lambda pair: (-pair[1], pair[0]),
        )[:3]
        assert [(h["id"], round(h["similarity"], 9)) for h in hits] == [
            (i, round(s, 9)) for i, s in expected
        ]
