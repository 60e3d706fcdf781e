"""Reader for WordNet-format lexical database files.

Parses the standard index.<pos>/data.<pos> file layout and extracts the
derivationally-related-form links ('+' pointers) from verb and adjective
synsets to noun synsets, yielding a lemma -> noun-lemmas table. Works
against a full WordNet database directory or the small bundled extract.
"""

from __future__ import annotations

from pathlib import Path

_POS_FILES = {"n": "data.noun", "v": "data.verb", "a": "data.adj"}
_DERIVATION_SYMBOL = "+"


def _clean_lemma(word: str) -> str:
    # adjective entries may carry syntactic markers like "(a)" or "(p)"
    if word.endswith(")") and "(" in word:
        word = word[: word.index("(")]
    return word.replace("_", " ").lower()


class Synset:
    __slots__ = ("offset", "pos", "words", "pointers")

    def __init__(self, offset: str, pos: str, words: list[str], pointers: list[tuple]):
        self.offset = offset
        self.pos = pos
        self.words = words
        self.pointers = pointers  # (symbol, target_offset, target_pos, src, tgt)


def _parse_data_line(line: str) -> Synset | None:
    if line.startswith(" ") or not line.strip():
        return None
    head, _, _gloss = line.partition(" | ")
    fields = head.split()
    offset, _lex_filenum, ss_type = fields[0], fields[1], fields[2]
    w_cnt = int(fields[3], 16)
    words = []
    idx = 4
    for _ in range(w_cnt):
        words.append(_clean_lemma(fields[idx]))
        idx += 2  # skip lex_id
    p_cnt = int(fields[idx])
    idx += 1
    pointers = []
    for _ in range(p_cnt):
        symbol, target_offset, target_pos, src_tgt = fields[idx : idx + 4]
        src = int(src_tgt[:2], 16)
        tgt = int(src_tgt[2:], 16)
        pointers.append((symbol, target_offset, target_pos, src, tgt))
        idx += 4
    pos = "a" if ss_type in ("a", "s") else ss_type
    return Synset(offset, pos, words, pointers)


def _load_data_file(path: Path) -> dict[str, Synset]:
    synsets: dict[str, Synset] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        synset = _parse_data_line(line)
        if synset is not None:
            synsets[synset.offset] = synset
    return synsets


def load_derivations(directory: str | Path) -> dict[str, list[str]]:
    """Map verb/adjective lemmas to derivationally-linked noun lemmas.

    Missing files yield an empty table (callers degrade gracefully).
    """
    directory = Path(directory)
    noun_path = directory / _POS_FILES["n"]
    if not noun_path.exists():
        return {}
    nouns = _load_data_file(noun_path)
    table: dict[str, set[str]] = {}
    for pos in ("v", "a"):
        path = directory / _POS_FILES[pos]
        if not path.exists():
            continue
        for synset in _load_data_file(path).values():
            for symbol, target_offset, target_pos, src, tgt in synset.pointers:
                if symbol != _DERIVATION_SYMBOL or target_pos != "n":
                    continue
                if src == 0 or tgt == 0:
                    continue
                target = nouns.get(target_offset)
                if target is None or tgt > len(target.words) or src > len(synset.words):
                    continue
                source_lemma = synset.words[src - 1]
                table.setdefault(source_lemma, set()).add(target.words[tgt - 1])
    return {lemma: sorted(nouns_) for lemma, nouns_ in table.items()}
