from hypothesis import given, settings
from hypothesis import strategies as st

from inflo import entities as en
from inflo import textcore as tc
from inflo.entities import EntityLabel
from inflo.textcore import POSClass


def mentions_of(text):
    tokens = tc.tokenize(text)
    return tokens, en.extract_entities(tokens)


class TestExtractEntities:
    def test_gazetteer_country(self):
        _, mentions = mentions_of("France won the match.")
        assert [(m.surface, m.label) for m in mentions] == [("France", EntityLabel.GPE)]

    def test_honorific_person(self):
        _, mentions = mentions_of("Mr. Smith said so.")
        assert [(m.surface, m.label) for m in mentions] == [("Smith", EntityLabel.PERSON)]

    def test_all_lowercase(self):
        _, mentions = mentions_of("all quiet on the western front today")
        assert mentions == []

    def test_org_suffix(self):
        # "Corp." is not on the protected abbreviation list, so its period peels
        _, mentions = mentions_of("Shares of Acme Corp. tumbled.")
        assert [(m.surface, m.label) for m in mentions] == [("Acme Corp", EntityLabel.ORG)]

    def test_given_name(self):
        _, mentions = mentions_of("Reporters met Maria Gonzalez yesterday.")
        assert [(m.surface, m.label) for m in mentions] == [
            ("Maria Gonzalez", EntityLabel.PERSON)
        ]

    def test_multiword_gpe(self):
        _, mentions = mentions_of("Prices in New York fell.")
        assert ("New York", EntityLabel.GPE) in [(m.surface, m.label) for m in mentions]

    def test_sentence_initial_common_word_skipped(self):
        _, mentions = mentions_of("Growth slowed last quarter.")
        assert mentions == []

    def test_sentence_initial_unknown_kept(self):
        _, mentions = mentions_of("Zorblat attacked the outpost.")
        assert [m.surface for m in mentions] == ["Zorblat"]

    def test_mentions_sorted_nonoverlapping_within_sentences(self):
        tokens, mentions = mentions_of(
            "Paris greeted Angela Merkel. Later Berlin welcomed Emmanuel Macron."
        )
        for a, b in zip(mentions, mentions[1:]):
            assert a.token_end <= b.token_start
        for m in mentions:
            idxs = {tokens[i].sent_idx for i in range(m.token_start, m.token_end)}
            assert len(idxs) == 1

    def test_surface_matches_tokens(self):
        tokens, mentions = mentions_of("Officials from South Korea visited Tokyo.")
        for m in mentions:
            joined = " ".join(t.text for t in tokens[m.token_start : m.token_end])
            assert m.surface == joined

    def test_deterministic(self):
        text = "Angela Merkel met Emmanuel Macron in Paris."
        assert mentions_of(text)[1] == mentions_of(text)[1]


class TestEntityUnkTransform:
    def test_label_specific_unk(self):
        tokens = tc.tokenize("He toured Quuxland today.")
        mention = en.mention_from_span(tokens, 2, 3, EntityLabel.GPE)
        out = en.entity_unk_transform(tokens, [mention], {"he", "toured", "today"})
        assert out == ["he", "toured", "GPE-UNK", "today"]

    def test_known_token_identity(self):
        tokens = tc.tokenize("the election results")
        out = en.entity_unk_transform(tokens, [], {"the", "election", "results"})
        assert out == ["the", "election", "results"]

    def test_oov_outside_mentions(self):
        tokens = tc.tokenize("please frobnicate now")
        out = en.entity_unk_transform(tokens, [], {"please", "now"})
        assert out == ["please", "UNK", "now"]

    def test_length_equals_non_punct_count(self):
        tokens = tc.tokenize('Mr. Smith (of Acme Corp.) said: "Prices rose 3%."')
        mentions = en.extract_entities(tokens)
        out = en.entity_unk_transform(tokens, mentions, set())
        expected = sum(1 for t in tokens if t.pos != POSClass.PUNCT)
        assert len(out) == expected

    def test_empty_vocab_all_unk(self):
        tokens = tc.tokenize("France defeated Brazil yesterday.")
        mentions = en.extract_entities(tokens)
        out = en.entity_unk_transform(tokens, mentions, set())
        for emitted in out:
            assert emitted == "UNK" or emitted.endswith("-UNK")

    def test_full_vocab_identity(self):
        tokens = tc.tokenize("France defeated Brazil in Paris yesterday.")
        mentions = en.extract_entities(tokens)
        vocab = {t.lower for t in tokens}
        out = en.entity_unk_transform(tokens, mentions, vocab)
        assert out == [t.lower for t in tokens if t.pos != POSClass.PUNCT]

    def test_plain_mode_collapses_labels(self):
        tokens = tc.tokenize("He toured Quuxland today.")
        mention = en.mention_from_span(tokens, 2, 3, EntityLabel.GPE)
        out = en.entity_unk_transform(
            tokens, [mention], {"he", "toured", "today"}, entity_aware=False
        )
        assert out == ["he", "toured", "UNK", "today"]

    @given(st.text(alphabet=st.sampled_from("abc XYZ."), max_size=60))
    @settings(max_examples=100, deadline=None)
    def test_length_property(self, text):
        tokens = tc.tokenize(text)
        mentions = en.extract_entities(tokens)
        out = en.entity_unk_transform(tokens, mentions, set())
        assert len(out) == sum(1 for t in tokens if t.pos != POSClass.PUNCT)


class TestEntityKey:
    def test_demonym_singularized(self):
        tokens = tc.tokenize("The Italians voted.")
        mentions = en.extract_entities(tokens)
        assert [en.entity_key(m) for m in mentions] == ["italian"]

    def test_multiword(self):
        tokens = tc.tokenize("He left New York today.")
        mentions = en.extract_entities(tokens)
        assert "new york" in [en.entity_key(m) for m in mentions]

    def test_acronym_lowered(self):
        tokens = tc.tokenize("Shares of IBM rose.")
        mentions = en.extract_entities(tokens)
        assert [en.entity_key(m) for m in mentions] == ["ibm"]
