"""Rule-based named-entity recognition and entity-typed UNK substitution.

Mentions are maximal capitalized runs labeled by gazetteer lookup and
suffix/honorific cues. Documents may arrive with pre-annotated entities,
in which case extraction is skipped and the annotations are used verbatim.
The gazetteers are small bundled lists; recall losses are acceptable
because labels feed frequency models, not user-facing NER output.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .textcore import POSClass, Token, sentence_initial_flags, singularize, stem

_DATA_DIR = Path(__file__).parent / "data" / "gazetteers"


class EntityLabel(str, Enum):
    PERSON = "PERSON"
    ORG = "ORG"
    GPE = "GPE"
    PRODUCT = "PRODUCT"
    EVENT = "EVENT"
    OTHER = "OTHER"


UNK = "UNK"
UNK_TOKENS = tuple(f"{label.value}-UNK" for label in EntityLabel)

HONORIFICS = frozenset({"mr.", "ms.", "mrs.", "dr.", "prof."})


@dataclass(frozen=True)
class EntityMention:
    token_start: int
    token_end: int
    label: EntityLabel
    surface: str
    normalized: str


def _load_set(name: str) -> frozenset[str]:
    path = _DATA_DIR / name
    return frozenset(
        line.strip() for line in path.read_text(encoding="utf-8").splitlines() if line.strip()
    )


GPE_GAZETTEER = _load_set("gpe.txt")
GIVEN_NAMES = _load_set("person_given.txt")
ORG_SUFFIXES = _load_set("org_suffix.txt")


def _normalize_surface(tokens: list[Token]) -> str:
    return " ".join(singularize(t.text).title() if t.text.islower() else singularize(t.text)
                    for t in tokens)


def _label_run(tokens: list[Token], run: list[Token], start_idx: int) -> EntityLabel:
    if start_idx > 0 and tokens[start_idx - 1].lower in HONORIFICS:
        return EntityLabel.PERSON
    last = run[-1].lower.rstrip(".")
    if last in ORG_SUFFIXES or run[-1].lower in ORG_SUFFIXES:
        return EntityLabel.ORG
    surface_lower = " ".join(t.lower for t in run)
    if surface_lower in GPE_GAZETTEER:
        return EntityLabel.GPE
    singular = " ".join(singularize(t.lower) for t in run)
    if singular in GPE_GAZETTEER:
        return EntityLabel.GPE
    if run[0].lower in GIVEN_NAMES:
        return EntityLabel.PERSON
    return EntityLabel.OTHER


def mention_from_span(tokens: list[Token], start: int, end: int, label: EntityLabel) -> EntityMention:
    """Build a mention over tokens[start:end]; used for pre-annotated input."""
    run = tokens[start:end]
    return EntityMention(
        token_start=start,
        token_end=end,
        label=label,
        surface=" ".join(t.text for t in run),
        normalized=_normalize_surface(run),
    )


def extract_entities(tokens: list[Token]) -> list[EntityMention]:
    """Find maximal capitalized/PROPN runs within sentences and label them.

    A run excludes STOP/PUNCT/NUM tokens; a single sentence-initial
    capitalized token that is a lexicon-known common word is not a mention
    (it is just an ordinary sentence opener).
    """
    from .textcore import POS_LEXICON

    initial = sentence_initial_flags(tokens)
    mentions: list[EntityMention] = []
    i = 0
    n = len(tokens)

    def eligible(k: int) -> bool:
        t = tokens[k]
        if t.pos in (POSClass.STOP, POSClass.PUNCT, POSClass.NUM):
            return False
        if t.lower in HONORIFICS:
            return False
        return t.text[:1].isupper() or t.pos == POSClass.PROPN

    while i < n:
        if not eligible(i):
            i += 1
            continue
        j = i + 1
        while j < n and tokens[j].sent_idx == tokens[i].sent_idx and eligible(j):
            j += 1
        is_singleton = j - i == 1
        known_common = (
            tokens[i].lower in POS_LEXICON or singularize(tokens[i].lower) in POS_LEXICON
        )
        if is_singleton and initial[i] and known_common:
            i = j
            continue
        mentions.append(mention_from_span(tokens, i, j, _label_run(tokens, tokens[i:j], i)))
        i = j
    return mentions


def entity_unk_transform(
    tokens: list[Token],
    mentions: list[EntityMention],
    vocab: set[str] | frozenset[str],
    entity_aware: bool = True,
) -> list[str]:
    """Map the token stream to classifier ids; PUNCT tokens are dropped.

    In-vocabulary tokens emit their lower form. Out-of-vocabulary tokens
    emit "<LABEL>-UNK" inside an entity mention (one per token) and "UNK"
    elsewhere. With entity_aware=False every OOV token collapses to "UNK",
    which is the ablation baseline.
    """
    label_at: dict[int, EntityLabel] = {}
    if entity_aware:
        for m in mentions:
            for k in range(m.token_start, m.token_end):
                label_at[k] = m.label
    out: list[str] = []
    for idx, t in enumerate(tokens):
        if t.pos == POSClass.PUNCT:
            continue
        if t.lower in vocab:
            out.append(t.lower)
        elif idx in label_at:
            out.append(f"{label_at[idx].value}-UNK")
        else:
            out.append(UNK)
    return out


def entity_key(mention: EntityMention) -> str:
    """Canonical DF/dedup key: lowercased, singularized, stemmed words."""
    words = mention.surface.split()
    return " ".join(stem(singularize(w.lower())) for w in words)
