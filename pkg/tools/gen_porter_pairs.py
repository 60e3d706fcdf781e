"""Generate the frozen Porter reference-pair fixture.

Cross-validates src/inflo/_porter.py against the independently written
implementation in tools/porter_alt.py over a large vocabulary (real words
from the bundled data files plus mechanically inflected variants), anchors
both against the worked examples published with the algorithm, and writes
a deterministic 1,000-pair sample to tests/fixtures/porter_pairs.tsv.

Run from the repository root: python tools/gen_porter_pairs.py
"""

import random
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tools"))
sys.path.insert(0, str(ROOT / "src"))

from porter_alt import (  # noqa: E402
    step1a, step1b, step1c, step5a, stem_alt,
)
from inflo import _porter  # noqa: E402

# Worked examples for individual steps, as published with the algorithm.
STEP_ANCHORS = {
    "1a": [("caresses", "caress"), ("ponies", "poni"), ("ties", "ti"),
           ("caress", "caress"), ("cats", "cat")],
    "1b": [("feed", "feed"), ("agreed", "agree"), ("plastered", "plaster"),
           ("bled", "bled"), ("motoring", "motor"), ("sing", "sing"),
           ("conflated", "conflate"), ("troubled", "trouble"), ("sized", "size"),
           ("hopping", "hop"), ("tanned", "tan"), ("falling", "fall"),
           ("hissing", "hiss"), ("fizzed", "fizz"), ("failing", "fail"),
           ("filing", "file")],
    "1c": [("happy", "happi"), ("sky", "sky")],
    "5a": [("probate", "probat"), ("rate", "rate"), ("cease", "ceas")],
}

# Full-pipeline outputs known from the published reference behavior.
FULL_ANCHORS = [
    ("running", "run"), ("flies", "fli"), ("a", "a"),
    ("generalizations", "gener"), ("oscillators", "oscil"),
    ("caresses", "caress"), ("cats", "cat"), ("feed", "feed"),
    ("motoring", "motor"), ("happy", "happi"), ("sky", "sky"),
    ("electrical", "electr"), ("hopeful", "hope"), ("goodness", "good"),
]

SUFFIXES = ["s", "es", "ies", "ed", "ing", "ings", "ly", "ness", "ful",
            "ous", "ive", "ize", "er", "ation", "ational", "ment", "ement",
            "ant", "ent", "ism", "iti", "biliti", "alli", "ousli", "logi",
            "ator", "icate", "ative", "alize", "ical", "ion", "y", "e"]


def load_vocab() -> list[str]:
    data = ROOT / "src" / "inflo" / "data"
    words: set[str] = set()
    for path in [data / "stopwords.txt", *sorted((data / "gazetteers").glob("*.txt"))]:
        for line in path.read_text().splitlines():
            words.update(line.strip().split())
    for path in [data / "pos_lexicon.tsv", data / "singular_exceptions.tsv",
                 data / "demonyms.tsv"]:
        for line in path.read_text().splitlines():
            words.update(line.replace("\t", " ").split())
    for name, anchors in STEP_ANCHORS.items():
        words.update(w for w, _ in anchors)
    words.update(w for w, _ in FULL_ANCHORS)
    base = sorted(w for w in words if w.isalpha() and len(w) >= 3)
    rng = random.Random(20180101)
    inflected = [w + rng.choice(SUFFIXES) for w in base for _ in range(2)]
    return sorted(set(base) | set(inflected))


def main() -> None:
    for word, expect in STEP_ANCHORS["1a"]:
        assert step1a(word) == expect, ("alt 1a", word, step1a(word), expect)
        assert _porter._step1a(word) == expect, ("main 1a", word)
    for word, expect in STEP_ANCHORS["1b"]:
        assert step1b(word) == expect, ("alt 1b", word, step1b(word), expect)
        assert _porter._step1b(word) == expect, ("main 1b", word)
    for word, expect in STEP_ANCHORS["1c"]:
        assert step1c(word) == expect, ("alt 1c", word)
        assert _porter._step1c(word) == expect, ("main 1c", word)
    for word, expect in STEP_ANCHORS["5a"]:
        assert step5a(word) == expect, ("alt 5a", word, step5a(word), expect)
        assert _porter._step5a(word) == expect, ("main 5a", word)
    for word, expect in FULL_ANCHORS:
        got_main, got_alt = _porter.stem(word), stem_alt(word)
        assert got_main == expect, ("main full", word, got_main, expect)
        assert got_alt == expect, ("alt full", word, got_alt, expect)
    print("anchors ok")

    vocab = load_vocab()
    disagreements = []
    pairs = []
    for word in vocab:
        a, b = _porter.stem(word), stem_alt(word)
        if a != b:
            disagreements.append((word, a, b))
        else:
            pairs.append((word, a))
    if disagreements:
        for word, a, b in disagreements[:40]:
            print(f"DISAGREE {word}: main={a} alt={b}")
        raise SystemExit(f"{len(disagreements)} disagreements over {len(vocab)} words")
    print(f"agreement on all {len(vocab)} words")

    anchor_words = {w for w, _ in FULL_ANCHORS}
    sample = [p for p in pairs if p[0] in anchor_words]
    rest = [p for p in pairs if p[0] not in anchor_words]
    rng = random.Random(1980)
    sample += rng.sample(rest, 1000 - len(sample))
    sample.sort()
    out = ROOT / "tests" / "fixtures" / "porter_pairs.tsv"
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w") as f:
        for word, stemmed in sample:
            f.write(f"{word}\t{stemmed}\n")
    print(f"wrote {len(sample)} pairs to {out}")


if __name__ == "__main__":
    main()
