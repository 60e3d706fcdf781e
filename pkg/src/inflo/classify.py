"""12-way category classification over entity-UNK token streams.

A multinomial naive Bayes stands in for the original deep classifier
behind the same build_vocab/train/predict/evaluate interface: it trains
in milliseconds, is exactly reproducible, and isolates the entity-typed
UNK preprocessing as the variable under test. Out-of-vocabulary tokens
keep their entity type ("GPE-UNK", "PERSON-UNK", ...) instead of
collapsing into a single UNK, so entity-type evidence survives unseen
surface forms; entity_aware=False gives the plain-UNK baseline.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass
from pathlib import Path

from .corpus import CATEGORIES, Category, Document
from .entities import UNK, UNK_TOKENS, entity_unk_transform

_NB_MAGIC = "inflo-nb"
NB_FORMAT_VERSION = 1

RESERVED_TOKENS = (UNK,) + UNK_TOKENS


class EmptyTrainingSet(ValueError):
    pass


class EmptyTestSet(ValueError):
    pass


class ModelFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Vocabulary:
    tokens: tuple[str, ...]
    min_df: int

    @property
    def members(self) -> frozenset[str]:
        return frozenset(self.tokens)

    def __len__(self) -> int:
        return len(self.tokens)


def build_vocab(train_docs: list[Document], min_df: int = 2) -> Vocabulary:
    """Lowered alphabetic tokens with document frequency >= min_df,
    plus the reserved UNK pseudo-tokens."""
    df: dict[str, int] = {}
    for doc in train_docs:
        seen = {t.lower for t in doc.tokens if t.lower.isalpha()}
        for token in seen:
            df[token] = df.get(token, 0) + 1
    kept = sorted(t for t, n in df.items() if n >= min_df)
    return Vocabulary(tokens=tuple(kept) + RESERVED_TOKENS, min_df=min_df)


@dataclass
class ClassifierModel:
    vocab: Vocabulary
    log_prior: dict[Category, float]
    log_likelihood: dict[Category, dict[str, float]]
    smoothing: float
    entity_aware: bool = True


def _token_stream(doc: Document, vocab: Vocabulary, entity_aware: bool) -> list[str]:
    return entity_unk_transform(doc.tokens, doc.entities, vocab.members, entity_aware)


def train(
    train_docs: list[Document],
    vocab: Vocabulary,
    smoothing: float = 1.0,
    entity_aware: bool = True,
) -> ClassifierModel:
    """Multinomial model with add-s smoothing over the vocabulary."""
    if not train_docs:
        raise EmptyTrainingSet("no training documents")
    doc_counts: dict[Category, int] = {c: 0 for c in CATEGORIES}
    token_counts: dict[Category, dict[str, int]] = {c: {} for c in CATEGORIES}
    totals: dict[Category, int] = {c: 0 for c in CATEGORIES}
    for doc in train_docs:
        if doc.category is None:
            raise EmptyTrainingSet(f"document {doc.id} has no gold category")
        doc_counts[doc.category] += 1
        counts = token_counts[doc.category]
        for token in _token_stream(doc, vocab, entity_aware):
            counts[token] = counts.get(token, 0) + 1
            totals[doc.category] += 1
    n = len(train_docs)
    vocab_size = len(vocab)
    log_prior: dict[Category, float] = {}
    log_likelihood: dict[Category, dict[str, float]] = {}
    for category in CATEGORIES:
        docs_c = doc_counts[category]
        log_prior[category] = math.log(docs_c / n) if docs_c else float("-inf")
        denominator = totals[category] + smoothing * vocab_size
        counts = token_counts[category]
        log_likelihood[category] = {
            token: math.log((counts.get(token, 0) + smoothing) / denominator)
            for token in vocab.tokens
        }
    return ClassifierModel(
        vocab=vocab,
        log_prior=log_prior,
        log_likelihood=log_likelihood,
        smoothing=smoothing,
        entity_aware=entity_aware,
    )


def predict(doc: Document, model: ClassifierModel) -> tuple[Category, dict[Category, float]]:
    """Posterior over categories (softmax of log scores); argmax with
    ties broken by the fixed category enumeration order."""
    stream = _token_stream(doc, model.vocab, model.entity_aware)
    log_scores: dict[Category, float] = {}
    for category in CATEGORIES:
        score = model.log_prior[category]
        likelihood = model.log_likelihood[category]
        for token in stream:
            score += likelihood[token]
        log_scores[category] = score
    top = max(log_scores.values())
    if math.isinf(top):
        raise EmptyTrainingSet("model has no trained categories")
    exp_scores = {c: math.exp(s - top) for c, s in log_scores.items()}
    z = sum(exp_scores.values())
    probabilities = {c: v / z for c, v in exp_scores.items()}
    best = max(CATEGORIES, key=lambda c: probabilities[c])  # first max wins ties
    return best, probabilities


def evaluate(test_docs: list[Document], model: ClassifierModel) -> dict:
    """Accuracy plus a gold-by-predicted confusion table."""
    if not test_docs:
        raise EmptyTestSet("no test documents")
    confusion = {g.value: {p.value: 0 for p in CATEGORIES} for g in CATEGORIES}
    correct = 0
    for doc in test_docs:
        if doc.category is None:
            raise EmptyTestSet(f"document {doc.id} has no gold category")
        predicted, _ = predict(doc, model)
        confusion[doc.category.value][predicted.value] += 1
        if predicted == doc.category:
            correct += 1
    return {"accuracy": correct / len(test_docs), "confusion": confusion}


def _float_repr(x: float) -> str:
    return repr(x)


def save_classifier(model: ClassifierModel, path: str | Path) -> None:
    lines = [f"{_NB_MAGIC} v{NB_FORMAT_VERSION}\n"]
    lines.append(f"smoothing {_float_repr(model.smoothing)}\n")
    lines.append(f"min_df {model.vocab.min_df}\n")
    lines.append(f"entity_aware {int(model.entity_aware)}\n")
    lines.append(f"vocab {len(model.vocab)}\n")
    for token in model.vocab.tokens:
        lines.append(token + "\n")
    lines.append(f"priors {len(CATEGORIES)}\n")
    for category in CATEGORIES:
        lines.append(f"{category.value}\t{_float_repr(model.log_prior[category])}\n")
    for category in CATEGORIES:
        likelihood = model.log_likelihood[category]
        lines.append(f"likelihood {category.value} {len(likelihood)}\n")
        for token in model.vocab.tokens:
            lines.append(f"{token}\t{_float_repr(likelihood[token])}\n")
    body = "".join(lines).encode("utf-8")
    crc = zlib.crc32(body) & 0xFFFFFFFF
    Path(path).write_bytes(body + f"#crc32 {crc:08x}\n".encode("ascii"))


def load_classifier(path: str | Path) -> ClassifierModel:
    data = Path(path).read_bytes()
    text = data.decode("utf-8")
    lines = text.splitlines()
    if not lines or not lines[-1].startswith("#crc32 "):
        raise ModelFormatError(f"{path}: missing crc32 trailer")
    stated = lines[-1].split()[1]
    body = text[: text.rindex("#crc32 ")].encode("utf-8")
    actual = f"{zlib.crc32(body) & 0xFFFFFFFF:08x}"
    if stated != actual:
        raise ModelFormatError(f"{path}: crc32 mismatch")
    if lines[0] != f"{_NB_MAGIC} v{NB_FORMAT_VERSION}":
        raise ModelFormatError(f"{path}: unsupported header {lines[0]!r}")
    idx = 1
    smoothing = float(lines[idx].split()[1]); idx += 1
    min_df = int(lines[idx].split()[1]); idx += 1
    entity_aware = bool(int(lines[idx].split()[1])); idx += 1
    vocab_size = int(lines[idx].split()[1]); idx += 1
    tokens = tuple(lines[idx : idx + vocab_size]); idx += vocab_size
    n_priors = int(lines[idx].split()[1]); idx += 1
    log_prior: dict[Category, float] = {}
    for _ in range(n_priors):
        name, value = lines[idx].split("\t"); idx += 1
        log_prior[Category(name)] = float(value)
    log_likelihood: dict[Category, dict[str, float]] = {}
    while idx < len(lines) and lines[idx].startswith("likelihood "):
        _, name, count = lines[idx].split(); idx += 1
        table: dict[str, float] = {}
        for _ in range(int(count)):
            token, value = lines[idx].split("\t"); idx += 1
            table[token] = float(value)
        log_likelihood[Category(name)] = table
    vocab = Vocabulary(tokens=tokens, min_df=min_df)
    return ClassifierModel(
        vocab=vocab,
        log_prior=log_prior,
        log_likelihood=log_likelihood,
        smoothing=smoothing,
        entity_aware=entity_aware,
    )
