"""Deterministic low-level text processing.

Sentence splitting, tokenization with character offsets, Porter stemming,
rule-based singularization, stopword lookup, and a pluggable rule POS
tagger. Everything here is a pure function over immutable inputs; the
bundled data files (stopwords, POS lexicon, singular exceptions) are
loaded once at import and never mutated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from ._porter import stem as _porter_stem

_DATA_DIR = Path(__file__).parent / "data"

# Sentence-splitter protection list; unknown abbreviations over-split,
# which only perturbs sentence indices downstream.
ABBREVIATIONS = frozenset({"Mr.", "Ms.", "Dr.", "U.S.", "Inc.", "vs.", "St.", "No."})

_TERMINALS = ".!?"


class POSClass(str, Enum):
    NOUN = "NOUN"
    PROPN = "PROPN"
    ADJ = "ADJ"
    VERB = "VERB"
    STOP = "STOP"
    PUNCT = "PUNCT"
    NUM = "NUM"
    OTHER = "OTHER"


@dataclass
class Token:
    text: str
    lower: str
    stem: str
    word_pos: int
    sent_idx: int
    char_start: int
    char_end: int
    pos: POSClass | None = None


def _load_wordset(path: Path) -> frozenset[str]:
    return frozenset(
        line.strip() for line in path.read_text(encoding="utf-8").splitlines() if line.strip()
    )


def _load_tsv(path: Path) -> dict[str, str]:
    out: dict[str, str] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        key, value = line.split("\t")
        out[key] = value
    return out


STOPWORDS = _load_wordset(_DATA_DIR / "stopwords.txt")
POS_LEXICON = {w: POSClass(c) for w, c in _load_tsv(_DATA_DIR / "pos_lexicon.tsv").items()}
SINGULAR_EXCEPTIONS = _load_tsv(_DATA_DIR / "singular_exceptions.tsv")


def stem(word: str) -> str:
    """Porter stem of a lowercase word."""
    return _porter_stem(word)


def is_stopword(word: str) -> bool:
    return word in STOPWORDS


def _preceding_word(text: str, dot_idx: int) -> str:
    k = dot_idx
    while k > 0 and not text[k - 1].isspace():
        k -= 1
    return text[k : dot_idx + 1]


def _split_segment(text: str, lo: int, hi: int) -> list[tuple[int, int]]:
    spans: list[tuple[int, int]] = []
    start = None
    for k in range(lo, hi):
        if not text[k].isspace():
            start = k
            break
    if start is None:
        return []
    i = start
    while i < hi:
        c = text[i]
        if c in _TERMINALS:
            end = i + 1
            while end < hi and text[end] in _TERMINALS:
                end += 1
            if c == "." and end == i + 1 and _preceding_word(text, i) in ABBREVIATIONS:
                i = end
                continue
            j = end
            while j < hi and text[j].isspace():
                j += 1
            if j >= hi:
                spans.append((start, end))
                return spans
            if j > end and text[j].isupper():
                spans.append((start, end))
                start = j
                i = j
                continue
        i += 1
    last = hi - 1
    while last >= start and text[last].isspace():
        last -= 1
    if last >= start:
        spans.append((start, last + 1))
    return spans


def split_sentences(text: str) -> list[tuple[int, int]]:
    """Split into (char_start, char_end) sentence spans.

    Breaks after a run of {. ! ?} followed by whitespace and an uppercase
    letter; a '.' whose word is a protected abbreviation never breaks.
    Newlines are hard boundaries (headlines and paragraphs stand alone).
    Spans cover all non-whitespace content.
    """
    spans: list[tuple[int, int]] = []
    lo = 0
    n = len(text)
    for i in range(n + 1):
        if i == n or text[i] == "\n":
            if i > lo:
                spans.extend(_split_segment(text, lo, i))
            lo = i + 1
    return spans


def _split_chunk(chunk: str, offset: int) -> list[tuple[str, int, int]]:
    """Peel leading/trailing punctuation off a whitespace-delimited chunk."""
    pieces: list[tuple[str, int, int]] = []
    a, b = 0, len(chunk)
    lead: list[tuple[str, int, int]] = []
    while a < b and not chunk[a].isalnum():
        lead.append((chunk[a], offset + a, offset + a + 1))
        a += 1
    trail: list[tuple[str, int, int]] = []
    while b > a and not chunk[b - 1].isalnum():
        if chunk[a:b] in ABBREVIATIONS:
            break
        trail.append((chunk[b - 1], offset + b - 1, offset + b))
        b -= 1
    pieces.extend(lead)
    if b > a:
        pieces.append((chunk[a:b], offset + a, offset + b))
    pieces.extend(reversed(trail))
    return pieces


def tokenize(text: str, sentences: list[tuple[int, int]] | None = None) -> list[Token]:
    """Whitespace tokenization with punctuation peeling and dense positions.

    Internal hyphens, apostrophes and periods are kept ("U.S.-based" is one
    token). POS tags are filled by pos_tag.
    """
    if sentences is None:
        sentences = split_sentences(text)
    tokens: list[Token] = []
    sent_idx = 0
    for m in re.finditer(r"\S+", text):
        for surface, a, b in _split_chunk(m.group(), m.start()):
            while sent_idx + 1 < len(sentences) and a >= sentences[sent_idx][1]:
                sent_idx += 1
            lower = surface.casefold()
            tokens.append(
                Token(
                    text=surface,
                    lower=lower,
                    stem=_porter_stem(lower),
                    word_pos=len(tokens),
                    sent_idx=sent_idx,
                    char_start=a,
                    char_end=b,
                )
            )
    return pos_tag(tokens)


def detokenize(tokens: list[Token]) -> str:
    return " ".join(t.text for t in tokens)


def _match_case(original: str, replacement: str) -> str:
    if original.isupper() and len(original) > 1:
        return replacement.upper()
    if original[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def singularize(word: str) -> str:
    """Rule-based English singular with an exceptions table.

    Mass nouns and irregulars come from the bundled exceptions file
    ("news" stays "news", "men" maps to "man").
    """
    if not word:
        return word
    lower = word.lower()
    if lower in SINGULAR_EXCEPTIONS:
        return _match_case(word, SINGULAR_EXCEPTIONS[lower])
    if len(lower) >= 5 and lower.endswith("ies"):
        return word[:-3] + ("Y" if word.isupper() else "y")
    if len(lower) >= 5 and lower.endswith(("ses", "xes", "zes", "ches", "shes")):
        return word[:-2]
    if (
        len(lower) >= 4
        and lower.endswith("s")
        and not lower.endswith(("ss", "us", "is", "'s"))
    ):
        return word[:-1]
    return word


_ADJ_SUFFIXES = ("ous", "ful", "ive", "al")


def _tag_one(token: Token, sentence_initial: bool) -> POSClass:
    lower = token.lower
    if lower in STOPWORDS:
        return POSClass.STOP
    if not any(ch.isalnum() for ch in token.text):
        return POSClass.PUNCT
    if any(ch.isdigit() for ch in token.text) and not any(ch.isalpha() for ch in token.text):
        return POSClass.NUM
    from_lexicon = POS_LEXICON.get(lower)
    if from_lexicon is not None:
        return from_lexicon
    if token.text[:1].isupper() and not sentence_initial:
        return POSClass.PROPN
    if len(lower) >= 4 and lower.endswith("ly"):
        return POSClass.OTHER
    if len(lower) >= 5 and lower.endswith(("ing", "ed")):
        return POSClass.VERB
    if len(lower) >= 5 and lower.endswith(_ADJ_SUFFIXES):
        return POSClass.ADJ
    return POSClass.NOUN


def sentence_initial_flags(tokens: list[Token]) -> list[bool]:
    """True for the first word-like (alphanumeric) token of each sentence."""
    flags: list[bool] = []
    seen: set[int] = set()
    for token in tokens:
        wordlike = any(ch.isalnum() for ch in token.text)
        flags.append(wordlike and token.sent_idx not in seen)
        if wordlike:
            seen.add(token.sent_idx)
    return flags


def pos_tag(tokens: list[Token]) -> list[Token]:
    """Fill POS tags in place; pre-assigned tags are preserved (pluggable path)."""
    initial = sentence_initial_flags(tokens)
    for token, sentence_initial in zip(tokens, initial):
        if token.pos is None:
            token.pos = _tag_one(token, sentence_initial)
    return tokens
