"""Article ingestion, corpus splitting, and document-frequency tables.

DF tables are per-category and per-kind (phrase|entity), built with
per-document set semantics, and persisted one file per table in a
checksummed text format (header "inflo-df v1 ...", sorted keys, crc32
trailer) so models are diffable and bit-reproducible.
"""

from __future__ import annotations

import hashlib
import random
import zlib
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from enum import Enum
from pathlib import Path

from . import entities as en
from . import textcore as tc

EPOCH = datetime(1970, 1, 1, tzinfo=timezone.utc)

FORMAT_VERSION = 1
_DF_MAGIC = "inflo-df"


class Category(str, Enum):
    RegionalPolitics = "RegionalPolitics"
    Sports = "Sports"
    Entertainment = "Entertainment"
    InternationalRelations = "InternationalRelations"
    Science = "Science"
    Business = "Business"
    WarAndConflicts = "WarAndConflicts"
    LawAndOrder = "LawAndOrder"
    Technology = "Technology"
    US = "US"
    World = "World"
    Miscellaneous = "Miscellaneous"


CATEGORIES = list(Category)

KIND_PHRASE = "phrase"
KIND_ENTITY = "entity"
KINDS = (KIND_PHRASE, KIND_ENTITY)


class MissingBody(ValueError):
    pass


class EmptyCategory(ValueError):
    pass


class VersionMismatch(ValueError):
    pass


class CorruptTable(ValueError):
    pass


class MissingCategory(ValueError):
    pass


@dataclass
class Document:
    id: str
    title: str
    body: str
    source: str = ""
    published_at: datetime = EPOCH
    url: str = ""
    category: Category | None = None
    tokens: list[tc.Token] = field(default_factory=list)
    sentences: list[tuple[int, int]] = field(default_factory=list)
    entities: list[en.EntityMention] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    @property
    def text(self) -> str:
        if self.title and self.body:
            return self.title + "\n\n" + self.body
        return self.title or self.body


def doc_id(url: str, title: str) -> str:
    return hashlib.sha1(f"{url}|{title}".encode("utf-8")).hexdigest()[:16]


def build_document(
    title: str,
    body: str,
    source: str = "",
    published_at: datetime = EPOCH,
    url: str = "",
    category: Category | None = None,
    pre_entities: list[dict] | None = None,
    flags: list[str] | None = None,
) -> Document:
    """Tokenize, tag and entity-annotate an article.

    Title tokens are prepended to body tokens once. If pre_entities is
    given (list of {start_token, end_token, label}), those spans are used
    verbatim and rule-based extraction is skipped.
    """
    doc = Document(
        id=doc_id(url, title),
        title=title,
        body=body,
        source=source,
        published_at=published_at,
        url=url,
        category=category,
        flags=list(flags or ()),
    )
    text = doc.text
    doc.sentences = tc.split_sentences(text)
    doc.tokens = tc.tokenize(text, doc.sentences)
    if pre_entities is not None:
        doc.entities = [
            en.mention_from_span(
                doc.tokens, item["start_token"], item["end_token"],
                en.EntityLabel(item["label"]),
            )
            for item in pre_entities
        ]
    else:
        doc.entities = en.extract_entities(doc.tokens)
    return doc


def _parse_timestamp(value: str) -> datetime:
    raw = value.strip()
    if raw.endswith("Z"):
        raw = raw[:-1] + "+00:00"
    parsed = datetime.fromisoformat(raw)
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc)


def ingest(record: dict) -> Document:
    """Build a Document from one News-API-format article object.

    Raises MissingBody if both content and description are absent. An
    unparseable publishedAt keeps the document with published_at = epoch
    and a "malformed_timestamp" flag.
    """
    title = record.get("title") or ""
    body = record.get("content") or record.get("description") or ""
    if not body:
        raise MissingBody(f"article {title!r} has neither content nor description")
    source = (record.get("source") or {}).get("name", "") if isinstance(record.get("source"), dict) \
        else str(record.get("source") or "")
    flags = []
    published_at = EPOCH
    raw_ts = record.get("publishedAt")
    if raw_ts:
        try:
            published_at = _parse_timestamp(raw_ts)
        except ValueError:
            flags.append("malformed_timestamp")
    category = Category(record["category"]) if record.get("category") else None
    return build_document(
        title=title,
        body=body,
        source=source,
        published_at=published_at,
        url=record.get("url") or "",
        category=category,
        pre_entities=record.get("entities"),
        flags=flags,
    )


def split(
    docs: list[Document], seed: int
) -> tuple[list[Document], list[Document], list[Document]]:
    """Seeded 80/10/10 split, stratified per category, remainders to train.

    Every present category must have at least 3 documents so all three
    splits can be populated.
    """
    by_category: dict[Category, list[Document]] = {}
    for doc in docs:
        if doc.category is None:
            raise EmptyCategory(f"document {doc.id} has no gold category")
        by_category.setdefault(doc.category, []).append(doc)
    for category, members in by_category.items():
        if len(members) < 3:
            raise EmptyCategory(
                f"category {category.value} has {len(members)} documents; need >= 3"
            )
    rng = random.Random(seed)
    shuffled = list(docs)
    rng.shuffle(shuffled)
    train: list[Document] = []
    valid: list[Document] = []
    test: list[Document] = []
    for category in CATEGORIES:
        members = [d for d in shuffled if d.category == category]
        if not members:
            continue
        n = len(members)
        n_hold = max(1, round(n / 10))
        test.extend(members[:n_hold])
        valid.extend(members[n_hold : 2 * n_hold])
        train.extend(members[2 * n_hold :])
    return train, valid, test


def boost_recent(docs: list[Document], cutoff: datetime) -> list[Document]:
    """Duplicate documents published at or after the cutoff (adjacent copies)."""
    out: list[Document] = []
    for doc in docs:
        out.append(doc)
        if doc.published_at >= cutoff:
            out.append(replace(doc, id=doc.id + "#2"))
    return out


@dataclass
class DfTable:
    category: Category
    kind: str
    n_docs: int
    counts: dict[str, int]


def build_phrase_df(docs: list[Document], category: Category) -> DfTable:
    """Document frequencies of candidate-phrase keys (set semantics per doc)."""
    from .kpminer import select_candidates

    counts: dict[str, int] = {}
    for doc in docs:
        keys = {c.key for c in select_candidates(doc.tokens)}
        for key in keys:
            counts[key] = counts.get(key, 0) + 1
    return DfTable(category=category, kind=KIND_PHRASE, n_docs=len(docs), counts=counts)


def build_entity_df(docs: list[Document], category: Category) -> DfTable:
    """Document frequencies of canonical entity keys (set semantics per doc)."""
    counts: dict[str, int] = {}
    for doc in docs:
        keys = {en.entity_key(m) for m in doc.entities}
        for key in keys:
            counts[key] = counts.get(key, 0) + 1
    return DfTable(category=category, kind=KIND_ENTITY, n_docs=len(docs), counts=counts)


@dataclass
class ModelSet:
    tables: dict[tuple[Category, str], DfTable]
    format_version: int = FORMAT_VERSION

    def get(self, category: Category, kind: str) -> DfTable:
        return self.tables[(category, kind)]


def build_model_set(docs_by_category: dict[Category, list[Document]]) -> ModelSet:
    tables: dict[tuple[Category, str], DfTable] = {}
    for category in CATEGORIES:
        members = docs_by_category.get(category, [])
        tables[(category, KIND_PHRASE)] = build_phrase_df(members, category)
        tables[(category, KIND_ENTITY)] = build_entity_df(members, category)
    return ModelSet(tables=tables)


def _table_filename(category: Category, kind: str) -> str:
    return f"{category.value}.{kind}.df"


def _render_table(table: DfTable) -> bytes:
    lines = [f"{_DF_MAGIC} v{FORMAT_VERSION} {table.category.value} {table.kind} {table.n_docs}\n"]
    for key in sorted(table.counts):
        lines.append(f"{key}\t{table.counts[key]}\n")
    body = "".join(lines).encode("utf-8")
    crc = zlib.crc32(body) & 0xFFFFFFFF
    return body + f"#crc32 {crc:08x}\n".encode("ascii")


def _parse_table(data: bytes, origin: str) -> DfTable:
    text = data.decode("utf-8")
    lines = text.splitlines(keepends=True)
    if not lines or not lines[-1].startswith("#crc32 "):
        raise CorruptTable(f"{origin}: missing crc32 trailer")
    stated = lines[-1].split()[1].strip()
    body = "".join(lines[:-1]).encode("utf-8")
    actual = f"{zlib.crc32(body) & 0xFFFFFFFF:08x}"
    if stated != actual:
        raise CorruptTable(f"{origin}: crc32 mismatch (stated {stated}, actual {actual})")
    header = lines[0].split()
    if len(header) != 5 or header[0] != _DF_MAGIC:
        raise CorruptTable(f"{origin}: bad header")
    if header[1] != f"v{FORMAT_VERSION}":
        raise VersionMismatch(f"{origin}: expected v{FORMAT_VERSION}, found {header[1]}")
    category = Category(header[2])
    kind = header[3]
    if kind not in KINDS:
        raise CorruptTable(f"{origin}: unknown kind {kind}")
    n_docs = int(header[4])
    counts: dict[str, int] = {}
    for line in lines[1:-1]:
        key, _, value = line.rstrip("\n").rpartition("\t")
        counts[key] = int(value)
    return DfTable(category=category, kind=kind, n_docs=n_docs, counts=counts)


def save_models(model_set: ModelSet, directory: str | Path) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for category in CATEGORIES:
        for kind in KINDS:
            table = model_set.get(category, kind)
            path = directory / _table_filename(category, kind)
            path.write_bytes(_render_table(table))


def load_models(directory: str | Path) -> ModelSet:
    directory = Path(directory)
    tables: dict[tuple[Category, str], DfTable] = {}
    for category in CATEGORIES:
        for kind in KINDS:
            path = directory / _table_filename(category, kind)
            if not path.exists():
                raise MissingCategory(f"missing table file {path.name}")
            tables[(category, kind)] = _parse_table(path.read_bytes(), path.name)
    return ModelSet(tables=tables)
