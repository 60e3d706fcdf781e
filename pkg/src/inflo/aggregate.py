"""Tag normalization, de-duplication, three-method fusion and similarity.

Raw keyphrases from the three extractors are max-normalized per method
(their raw scales are incommensurable), normalized to singular/nounified
form, merged by stem key with containment pruning, and truncated to the
final tag list. Tag vectors support cosine-based related-article lookup.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, replace
from pathlib import Path

from .textcore import singularize, stem
from .wordnet_data import load_derivations

METHOD_PHRASE = "phrase"
METHOD_ENTITY = "entity"
METHOD_TOPIC = "topic"

_METHOD_PRIORITY = {METHOD_ENTITY: 0, METHOD_PHRASE: 1, METHOD_TOPIC: 2}

_DATA_DIR = Path(__file__).parent / "data"


@dataclass(frozen=True)
class Keyphrase:
    surface: str
    normalized: str
    key: str
    score: float
    method: str
    first_pos: int

    @property
    def stem_set(self) -> frozenset[str]:
        return frozenset(self.key.split())


class NounLexicon:
    """Demonym table plus derivational links from WordNet-format data."""

    def __init__(self, demonyms: dict[str, str], derivations: dict[str, list[str]]):
        self.demonyms = demonyms
        self.derivations = derivations

    @classmethod
    def load(
        cls,
        wordnet_dir: str | Path | None = None,
        demonyms_path: str | Path | None = None,
    ) -> "NounLexicon":
        demonyms: dict[str, str] = {}
        path = Path(demonyms_path) if demonyms_path else _DATA_DIR / "demonyms.tsv"
        for line in path.read_text(encoding="utf-8").splitlines():
            if line.strip():
                word, place = line.split("\t")
                demonyms[word] = place
        directory = Path(wordnet_dir) if wordnet_dir else _DATA_DIR / "wordnet"
        derivations = load_derivations(directory)
        if not derivations:
            warnings.warn(
                f"no WordNet-format data found under {directory}; "
                "nounification degrades to demonyms + singularization",
                stacklevel=2,
            )
        return cls(demonyms, derivations)


_default_lexicon: NounLexicon | None = None


def default_lexicon() -> NounLexicon:
    global _default_lexicon
    if _default_lexicon is None:
        _default_lexicon = NounLexicon.load()
    return _default_lexicon


def edit_distance(a: str, b: str) -> int:
    if len(a) < len(b):
        a, b = b, a
    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        current = [i]
        for j, cb in enumerate(b, start=1):
            current.append(min(
                previous[j] + 1,
                current[j - 1] + 1,
                previous[j - 1] + (ca != cb),
            ))
        previous = current
    return previous[-1]


def _best_noun(word: str, nouns: list[str]) -> str:
    return min(nouns, key=lambda noun: (edit_distance(word, noun), noun))


def nounify(word: str, lexicon: NounLexicon | None = None) -> str:
    """Map a word to a related noun form.

    Resolution order: demonym table, derivational links (closest noun by
    edit distance, ties lexicographic), singularization, identity. The
    chain is total and idempotent on its own output.
    """
    lexicon = lexicon or default_lexicon()
    if word in lexicon.demonyms:
        return lexicon.demonyms[word]
    singular = singularize(word)
    if singular in lexicon.demonyms:
        return lexicon.demonyms[singular]
    if word in lexicon.derivations:
        return _best_noun(word, lexicon.derivations[word])
    if singular != word and singular in lexicon.derivations:
        return _best_noun(singular, lexicon.derivations[singular])
    return singular


def normalize_keyphrase(kp: Keyphrase, lexicon: NounLexicon | None = None) -> Keyphrase:
    """Lowercase, singularize every word, nounify the head (last) word."""
    words = [singularize(w) for w in kp.surface.lower().split()]
    if words:
        words[-1] = nounify(words[-1], lexicon)
    normalized = " ".join(words)
    key = " ".join(stem(w) for w in words)
    return replace(kp, normalized=normalized, key=key)


def _merge_order(kp: Keyphrase) -> tuple:
    return (-kp.score, _METHOD_PRIORITY.get(kp.method, 9), kp.first_pos)


def deduplicate(kps: list[Keyphrase]) -> list[Keyphrase]:
    """Merge exact stem-key duplicates, then prune contained keyphrases.

    A keyphrase is dropped when another one strictly contains its stem set
    with a score at least as high. Output sorted by score descending.
    """
    by_key: dict[str, Keyphrase] = {}
    for kp in kps:
        held = by_key.get(kp.key)
        if held is None or _merge_order(kp) < _merge_order(held):
            by_key[kp.key] = kp
    merged = list(by_key.values())
    survivors = []
    for kp in merged:
        dominated = any(
            other is not kp
            and kp.stem_set < other.stem_set
            and kp.score <= other.score
            for other in merged
        )
        if not dominated:
            survivors.append(kp)
    survivors.sort(key=lambda kp: (-kp.score, kp.first_pos, kp.key))
    return survivors


def _max_normalize(kps: list[Keyphrase]) -> list[Keyphrase]:
    if not kps:
        return []
    top = max(kp.score for kp in kps)
    if top <= 0:
        return list(kps)
    return [replace(kp, score=kp.score / top) for kp in kps]


def aggregate_tags(
    phrases: list[Keyphrase],
    entities: list[Keyphrase],
    topics: list[Keyphrase],
    lexicon: NounLexicon | None = None,
    max_tags: int = 10,
) -> list[Keyphrase]:
    """Fuse the three extraction methods into the final tag list."""
    pooled: list[Keyphrase] = []
    for batch in (phrases, entities, topics):
        pooled.extend(_max_normalize(batch))
    normalized = [normalize_keyphrase(kp, lexicon) for kp in pooled]
    return deduplicate(normalized)[:max_tags]


def key_vector(tags: list[Keyphrase]) -> dict[str, float]:
    """L2-normalized sparse vector over normalized keyphrase keys."""
    weights: dict[str, float] = {}
    for kp in tags:
        if kp.score > 0:
            weights[kp.key] = max(weights.get(kp.key, 0.0), kp.score)
    norm = sum(w * w for w in weights.values()) ** 0.5
    if norm == 0:
        return {}
    return {key: w / norm for key, w in weights.items()}


def related(
    query: dict[str, float],
    index: list[tuple[str, dict[str, float]]],
    k: int,
    exclude_id: str | None = None,
) -> list[tuple[str, float]]:
    """Top-k cosine neighbors of an L2-normalized sparse vector."""
    if not query:
        return []
    scored = []
    for article_id, vector in index:
        if article_id == exclude_id:
            continue
        sim = sum(weight * vector.get(key, 0.0) for key, weight in query.items())
        scored.append((article_id, sim))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    return scored[:k]
