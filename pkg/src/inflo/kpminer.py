"""Statistical keyphrase extraction over category-specific DF tables.

Candidates are stopword-delimited word runs (plus their sub-spans up to
five words) aggregated by stem key. Filtering uses a least-allowable-seen
frequency and a first-occurrence position cutoff; scoring is TF-IDF with
a document-level boost favoring multi-word candidates. The phrase entry
point emits multi-word keyphrases only; the entity entry point runs the
same scoring over canonical entity keys and allows single words.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .aggregate import Keyphrase, METHOD_ENTITY, METHOD_PHRASE
from .corpus import DfTable, Document, KIND_ENTITY, KIND_PHRASE, ModelSet, Category
from .entities import entity_key
from .textcore import POSClass, Token

MAX_CANDIDATE_WORDS = 5


class CategoryKindMismatch(ValueError):
    pass


@dataclass
class Candidate:
    words: list[str]
    stems: list[str]
    key: str
    positions: list[int]

    @property
    def first_pos(self) -> int:
        return self.positions[0]

    @property
    def tf(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class KpParams:
    lasf: int = 2
    cutoff: int = 400
    boost_alpha: float = 2.3
    boost_sigma: float = 3.0
    top_k: int = 5


_EXCLUDED = (POSClass.STOP, POSClass.PUNCT, POSClass.NUM)


def _runs(tokens: list[Token]) -> list[list[Token]]:
    runs: list[list[Token]] = []
    current: list[Token] = []
    for token in tokens:
        boundary = token.pos in _EXCLUDED or (current and token.sent_idx != current[-1].sent_idx)
        if boundary:
            if current:
                runs.append(current)
                current = []
            if token.pos in _EXCLUDED:
                continue
        current.append(token)
    if current:
        runs.append(current)
    return runs


def select_candidates(tokens: list[Token]) -> list[Candidate]:
    """All sub-spans (length <= 5) of stopword-delimited runs, by stem key."""
    grouped: dict[str, Candidate] = {}
    order: list[str] = []
    for run in _runs(tokens):
        n = len(run)
        for i in range(n):
            for j in range(i + 1, min(i + 1 + MAX_CANDIDATE_WORDS, n + 1)):
                span = run[i:j]
                key = " ".join(t.stem for t in span)
                candidate = grouped.get(key)
                if candidate is None:
                    grouped[key] = Candidate(
                        words=[t.text for t in span],
                        stems=[t.stem for t in span],
                        key=key,
                        positions=[span[0].word_pos],
                    )
                    order.append(key)
                else:
                    candidate.positions.append(span[0].word_pos)
    out = [grouped[k] for k in order]
    for candidate in out:
        candidate.positions.sort()
    return out


def filter_candidates(
    candidates: list[Candidate], params: KpParams, doc_len: int
) -> list[Candidate]:
    """Keep tf >= lasf and first_pos < cutoff; short documents relax lasf to 1."""
    lasf = 1 if doc_len < params.cutoff else params.lasf
    return [
        c for c in candidates if c.tf >= lasf and c.first_pos < params.cutoff
    ]


def boost_factor(candidates: list[Candidate], params: KpParams) -> float:
    """Multi-word boost: min(N / (P * alpha), sigma); sigma when no multi-word."""
    total = sum(c.tf for c in candidates)
    multi = sum(c.tf for c in candidates if len(c.words) >= 2)
    if multi == 0:
        return params.boost_sigma
    return min(total / (multi * params.boost_alpha), params.boost_sigma)


def _idf(table: DfTable, key: str) -> float:
    if table.n_docs == 0:
        return 1.0
    df = table.counts.get(key, 1)
    return math.log2(table.n_docs / df)


def _score_candidates(
    candidates: list[Candidate], table: DfTable, params: KpParams, doc_len: int
) -> list[tuple[Candidate, float]]:
    kept = filter_candidates(candidates, params, doc_len)
    boost = boost_factor(kept, params)
    scored = []
    for c in kept:
        factor = boost if len(c.words) >= 2 else 1.0
        scored.append((c, c.tf * _idf(table, c.key) * factor))
    scored.sort(key=lambda pair: (-pair[1], pair[0].first_pos, pair[0].key))
    return scored


def score_phrases(
    tokens: list[Token], table: DfTable, params: KpParams = KpParams()
) -> list[tuple[Candidate, float]]:
    """Select, filter and score phrase candidates against a phrase DF table."""
    if table.kind != KIND_PHRASE:
        raise CategoryKindMismatch(f"expected a phrase table, got {table.kind}")
    return _score_candidates(select_candidates(tokens), table, params, len(tokens))


def entity_candidates(doc: Document) -> list[Candidate]:
    """One candidate per canonical entity key; tf counts mentions."""
    grouped: dict[str, Candidate] = {}
    order: list[str] = []
    for mention in doc.entities:
        key = entity_key(mention)
        candidate = grouped.get(key)
        if candidate is None:
            grouped[key] = Candidate(
                words=mention.surface.split(),
                stems=key.split(),
                key=key,
                positions=[mention.token_start],
            )
            order.append(key)
        else:
            candidate.positions.append(mention.token_start)
    out = [grouped[k] for k in order]
    for candidate in out:
        candidate.positions.sort()
    return out


def score_entities(
    doc: Document, table: DfTable, params: KpParams = KpParams()
) -> list[tuple[Candidate, float]]:
    if table.kind != KIND_ENTITY:
        raise CategoryKindMismatch(f"expected an entity table, got {table.kind}")
    return _score_candidates(entity_candidates(doc), table, params, len(doc.tokens))


def _to_keyphrase(candidate: Candidate, score: float, method: str) -> Keyphrase:
    return Keyphrase(
        surface=" ".join(candidate.words),
        normalized=" ".join(w.lower() for w in candidate.words),
        key=candidate.key,
        score=score,
        method=method,
        first_pos=candidate.first_pos,
    )


def extract_phrases(
    doc: Document, models: ModelSet, category: Category, params: KpParams = KpParams()
) -> list[Keyphrase]:
    """Top multi-word phrase keyphrases; single words never appear."""
    scored = score_phrases(doc.tokens, models.get(category, KIND_PHRASE), params)
    multi = [(c, s) for c, s in scored if len(c.words) >= 2]
    return [_to_keyphrase(c, s, METHOD_PHRASE) for c, s in multi[: params.top_k]]


def extract_entity_keyphrases(
    doc: Document, models: ModelSet, category: Category, params: KpParams = KpParams()
) -> list[Keyphrase]:
    """Top entity keyphrases; single-word entities are allowed."""
    scored = score_entities(doc, models.get(category, KIND_ENTITY), params)
    return [_to_keyphrase(c, s, METHOD_ENTITY) for c, s in scored[: params.top_k]]
