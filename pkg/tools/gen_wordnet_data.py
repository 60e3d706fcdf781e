"""Generate the bundled WordNet-format lexical extract.

Writes index/data noun+verb+adj files in the standard database layout,
containing a curated set of derivationally-related verb/adjective ->
noun links used by tag nounification. A full WordNet database directory
can be dropped in via configuration without code changes; this extract
keeps the default install self-contained.

Run from the repository root: python tools/gen_wordnet_data.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "src" / "inflo" / "data" / "wordnet"

# (source_lemma, source_pos, noun_lemma)
PAIRS = [
    ("elect", "v", "election"),
    ("decide", "v", "decision"),
    ("announce", "v", "announcement"),
    ("invade", "v", "invasion"),
    ("negotiate", "v", "negotiation"),
    ("investigate", "v", "investigation"),
    ("celebrate", "v", "celebration"),
    ("compete", "v", "competition"),
    ("perform", "v", "performance"),
    ("govern", "v", "government"),
    ("develop", "v", "development"),
    ("invest", "v", "investment"),
    ("agree", "v", "agreement"),
    ("resign", "v", "resignation"),
    ("destroy", "v", "destruction"),
    ("explode", "v", "explosion"),
    ("acquire", "v", "acquisition"),
    ("merge", "v", "merger"),
    ("regulate", "v", "regulation"),
    ("prosecute", "v", "prosecution"),
    ("convict", "v", "conviction"),
    ("legislate", "v", "legislation"),
    ("vaccinate", "v", "vaccination"),
    ("discover", "v", "discovery"),
    ("innovate", "v", "innovation"),
    ("produce", "v", "production"),
    ("consume", "v", "consumption"),
    ("educate", "v", "education"),
    ("negotiated", "v", "negotiation"),
    ("retire", "v", "retirement"),
    ("arrive", "v", "arrival"),
    ("approve", "v", "approval"),
    ("withdraw", "v", "withdrawal"),
    ("propose", "v", "proposal"),
    ("refuse", "v", "refusal"),
    ("survive", "v", "survival"),
    ("teach", "v", "teacher"),
    ("lead", "v", "leader"),
    ("employ", "v", "employment"),
    ("pollute", "v", "pollution"),
    ("reduce", "v", "reduction"),
    ("expand", "v", "expansion"),
    ("migrate", "v", "migration"),
    ("donate", "v", "donation"),
    ("accuse", "v", "accusation"),
    ("protect", "v", "protection"),
    ("recover", "v", "recovery"),
    ("economic", "a", "economy"),
    ("financial", "a", "finance"),
    ("industrial", "a", "industry"),
    ("scientific", "a", "science"),
    ("technological", "a", "technology"),
    ("political", "a", "politics"),
    ("presidential", "a", "president"),
    ("national", "a", "nation"),
    ("regional", "a", "region"),
    ("cultural", "a", "culture"),
    ("musical", "a", "music"),
    ("diplomatic", "a", "diplomacy"),
    ("strategic", "a", "strategy"),
    ("electoral", "a", "election"),
    ("legal", "a", "legality"),
    ("criminal", "a", "crime"),
    ("military", "a", "militarism"),
    ("violent", "a", "violence"),
    ("secure", "a", "security"),
    ("popular", "a", "popularity"),
    ("global", "a", "globe"),
    ("environmental", "a", "environment"),
    ("historic", "a", "history"),
    ("historical", "a", "history"),
    ("digital", "a", "digit"),
    ("agricultural", "a", "agriculture"),
    ("constitutional", "a", "constitution"),
    ("judicial", "a", "judiciary"),
    ("parliamentary", "a", "parliament"),
    ("athletic", "a", "athletics"),
    ("olympic", "a", "olympics"),
]


def check_consistency(pairs) -> None:
    sys.path.insert(0, str(ROOT / "src"))
    from inflo.textcore import singularize, SINGULAR_EXCEPTIONS  # noqa: F401

    demonyms = set()
    for line in (ROOT / "src" / "inflo" / "data" / "demonyms.tsv").read_text().splitlines():
        demonyms.add(line.split("\t")[0])
    keys = {source for source, _, _ in pairs}
    values = {noun for _, _, noun in pairs}
    clashes = keys & values
    assert not clashes, f"derivation keys must not be nouns: {clashes}"
    for noun in values:
        assert singularize(noun) == noun, f"noun {noun} not singular-stable"
        assert noun not in demonyms, f"noun {noun} shadows a demonym"
    for source in keys:
        assert source not in demonyms, f"key {source} shadows a demonym"


def main() -> None:
    check_consistency(PAIRS)
    OUT.mkdir(parents=True, exist_ok=True)

    noun_offsets: dict[str, str] = {}
    nouns = sorted({noun for _, _, noun in PAIRS})
    for i, noun in enumerate(nouns, start=1):
        noun_offsets[noun] = f"{i:08d}"

    by_pos: dict[str, list[tuple[str, str]]] = {"v": [], "a": []}
    for source, pos, noun in PAIRS:
        by_pos[pos].append((source, noun))

    lines_noun = []
    for noun in nouns:
        offset = noun_offsets[noun]
        word = noun.replace(" ", "_")
        lines_noun.append(f"{offset} 03 n 01 {word} 0 000 | {noun}\n")
    (OUT / "data.noun").write_text("".join(lines_noun), encoding="utf-8")
    (OUT / "index.noun").write_text(
        "".join(
            f"{noun.replace(' ', '_')} n 1 0 1 0 {noun_offsets[noun]}\n" for noun in nouns
        ),
        encoding="utf-8",
    )

    for pos, filename, index_name, ss_type in (
        ("v", "data.verb", "index.verb", "v"),
        ("a", "data.adj", "index.adj", "a"),
    ):
        entries = sorted(by_pos[pos])
        data_lines = []
        index_lines = []
        seen_offsets: dict[str, str] = {}
        for i, (source, noun) in enumerate(entries, start=1):
            offset = f"{i:08d}"
            if source not in seen_offsets:
                seen_offsets[source] = offset
            word = source.replace(" ", "_")
            target = noun_offsets[noun]
            data_lines.append(
                f"{offset} 00 {ss_type} 01 {word} 0 001 + {target} n 0101 | {source}\n"
            )
            index_lines.append(f"{word} {pos} 1 1 + 1 0 {offset}\n")
        (OUT / filename).write_text("".join(data_lines), encoding="utf-8")
        (OUT / index_name).write_text("".join(index_lines), encoding="utf-8")

    print(f"wrote {len(nouns)} noun synsets, {len(by_pos['v'])} verb links, "
          f"{len(by_pos['a'])} adjective links to {OUT}")


if __name__ == "__main__":
    main()
