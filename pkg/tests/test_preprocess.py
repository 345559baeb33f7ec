"""Preprocessing pipeline: tokenizer, splitter, tagger, lemmatizer, chunker."""

import string

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wikiharvest.preprocess import (ADJ, ADV, DET, NOUN, PUNCT, VERB,
                                    COARSE_TAGS, InvalidEncoding, Pipeline,
                                    Token, chunk_noun_phrases,
                                    default_stopwords, lemmatize, pos_tag,
                                    preprocess_document, split_sentences,
                                    tokenize)


def surfaces(tokens):
    return [t.surface for t in tokens]


class TestTokenize:
    def test_whitespace_and_punctuation_split(self):
        assert surfaces(tokenize("The rover stops.")) == \
            ["The", "rover", "stops", "."]

    def test_empty_input(self):
        assert tokenize("") == []

    def test_abbreviation_kept_whole(self):
        got = surfaces(tokenize("trainborne equipment, e.g., brakes"))
        assert got == ["trainborne", "equipment", ",", "e.g.", ",", "brakes"]

    def test_numbers_stay_whole(self):
        assert surfaces(tokenize("within 3.5 seconds")) == \
            ["within", "3.5", "seconds"]

    def test_every_non_space_char_covered_once(self):
        text = "A sentence, with (brackets) and e.g. symbols + 12,000."
        toks = tokenize(text)
        covered = [False] * len(text)
        for t in toks:
            assert t.start < t.end
            assert text[t.start:t.end] == t.surface
            for i in range(t.start, t.end):
                assert not covered[i], "overlapping token spans"
                covered[i] = True
        for i, ch in enumerate(text):
            assert covered[i] == (not ch.isspace())

    @given(st.text(alphabet=string.printable, max_size=200))
    @settings(max_examples=200)
    def test_round_trip_property(self, text):
        toks = tokenize(text)
        # spans are monotonically increasing and separated by whitespace
        rebuilt = []
        pos = 0
        for t in toks:
            gap = text[pos:t.start]
            assert gap.strip() == ""
            rebuilt.append(gap)
            rebuilt.append(t.surface)
            pos = t.end
        rebuilt.append(text[pos:])
        assert "".join(rebuilt) == text


class TestSplitSentences:
    def test_two_single_letter_sentences(self):
        assert len(split_sentences("A. B.")) == 2

    def test_abbreviation_does_not_split(self):
        sents = split_sentences("It uses e.g. brakes. It stops.")
        assert len(sents) == 2
        assert sents[0].text == "It uses e.g. brakes."

    def test_no_terminator_single_sentence(self):
        assert len(split_sentences("no terminator here at all")) == 1

    def test_blank_line_splits(self):
        sents = split_sentences("first requirement\n\nsecond requirement")
        assert len(sents) == 2

    def test_lowercase_after_period_does_not_split(self):
        assert len(split_sentences("See fig. 4 vs. the baseline.")) == 1

    def test_sentences_partition_tokens(self):
        text = "One sentence. A second one! And a third? Done."
        sents = split_sentences(text)
        assert len(sents) == 4
        all_tokens = [s for sent in sents for s in surfaces(sent.tokens)]
        assert all_tokens == surfaces(tokenize(text))

    def test_token_concatenation_reproduces_sentence_text(self):
        text = "The unit  shall stop. The door closes."
        for sent in split_sentences(text):
            pos = sent.start
            rebuilt = []
            for t in sent.tokens:
                rebuilt.append(text[pos:t.start])
                rebuilt.append(t.surface)
                pos = t.end
            assert "".join(rebuilt) == sent.text


class TestPosTag:
    def tag_of(self, text, word):
        toks = pos_tag(tokenize(text))
        return next(t.pos for t in toks if t.surface == word)

    def test_transmitted_in_verbal_position(self):
        assert self.tag_of("The data is transmitted to the server.",
                           "transmitted") == VERB

    def test_determiner(self):
        assert self.tag_of("the rover", "the") == DET

    def test_suffix_noun(self):
        assert self.tag_of("The notification arrives.", "notification") == NOUN

    def test_past_participle_as_modifier(self):
        assert self.tag_of("the transmitted message", "transmitted") == ADJ

    def test_imperative_verb(self):
        toks = pos_tag(tokenize("Stop immediately."))
        assert [t.pos for t in toks] == [VERB, ADV, PUNCT]

    def test_tagging_is_total(self):
        text = "Weird zxqv 12 e.g. Überraschung -- ok?"
        for t in pos_tag(tokenize(text)):
            assert t.pos in COARSE_TAGS

    def test_deterministic(self):
        text = "The braking system shall stop the train within 5 seconds."
        a = [t.pos for t in pos_tag(tokenize(text))]
        b = [t.pos for t in pos_tag(tokenize(text))]
        assert a == b


class TestLemmatize:
    def test_plural_noun(self, mini_wordnet):
        from wikiharvest.lexicon import make_lemmatizer
        lem = make_lemmatizer(mini_wordnet)
        assert lemmatize("communications", NOUN, lem) == "communication"

    def test_past_tense_verb(self, mini_wordnet):
        from wikiharvest.lexicon import make_lemmatizer
        lem = make_lemmatizer(mini_wordnet)
        assert lemmatize("transmitted", VERB, lem) == "transmit"

    def test_base_form_unchanged(self, mini_wordnet):
        from wikiharvest.lexicon import make_lemmatizer
        lem = make_lemmatizer(mini_wordnet)
        assert lemmatize("rover", NOUN, lem) == "rover"

    def test_without_lexicon_lowercases(self):
        assert lemmatize("Rovers", NOUN, None) == "rovers"


class TestChunker:
    def nps(self, text, pipeline):
        return [np.normalized for np in pipeline.preprocess(text).noun_phrases]

    def test_notification_service(self, wn_pipeline):
        assert "notification service" in \
            self.nps("The notification service shall run.", wn_pipeline)

    def test_lunar_rover(self, wn_pipeline):
        assert "lunar rover" in \
            self.nps("The lunar rover stops on command.", wn_pipeline)

    def test_sentence_without_nouns(self, wn_pipeline):
        assert self.nps("Stop immediately.", wn_pipeline) == []

    def test_determiner_stripped(self, wn_pipeline):
        got = self.nps("The rover moves. A rover waits.", wn_pipeline)
        assert got == ["rover", "rover"]

    def test_head_lemmatized_modifiers_verbatim(self, wn_pipeline):
        assert "lunar rovers" not in \
            self.nps("The lunar rovers stop.", wn_pipeline)
        assert "lunar rover" in self.nps("The lunar rovers stop.", wn_pipeline)

    def test_boundary_stopwords_stripped(self):
        stop = default_stopwords()
        toks = [
            Token("other", 0, 5, pos=NOUN),
            Token("trains", 6, 12, pos=NOUN),
        ]
        nps = chunk_noun_phrases(toks, None, stop)
        assert [np.normalized for np in nps] == ["trains"]

    def test_no_boundary_stopwords_invariant(self, wn_pipeline):
        stop = wn_pipeline.stopwords
        doc = wn_pipeline.preprocess(
            "The very same brake shall be applied by all other units.")
        for np in doc.noun_phrases:
            words = np.normalized.split()
            assert words[0] not in stop and words[-1] not in stop


class TestPipeline:
    def test_empty_string(self, wn_pipeline):
        doc = wn_pipeline.preprocess("", source_id="empty")
        assert doc.sentences == () and doc.noun_phrases == ()

    def test_single_line(self, wn_pipeline):
        doc = wn_pipeline.preprocess(
            "The trainborne equipment shall stop the train.")
        assert len(doc.sentences) == 1
        assert "trainborne equipment" in \
            [np.normalized for np in doc.noun_phrases]

    def test_deterministic(self, wn_pipeline):
        text = "The onboard unit sends a position report. It stops."
        assert wn_pipeline.preprocess(text) == wn_pipeline.preprocess(text)

    def test_invalid_encoding(self, wn_pipeline):
        with pytest.raises(InvalidEncoding):
            wn_pipeline.preprocess(b"\xff\xfe\x00bad")

    def test_bytes_accepted(self, wn_pipeline):
        doc = wn_pipeline.preprocess("The train stops.".encode("utf-8"))
        assert len(doc.sentences) == 1

    def test_stopword_marking(self, wn_pipeline):
        doc = wn_pipeline.preprocess("The brake is applied by the driver.")
        stop = wn_pipeline.stopwords
        for sent in doc.sentences:
            for tok in sent.tokens:
                assert tok.is_stopword == (tok.surface.lower() in stop)

    def test_normalized_reachable_from_surface(self, wn_pipeline):
        doc = wn_pipeline.preprocess(
            "The main signalling system shall monitor the red signals.")
        for np in doc.noun_phrases:
            surface_words = [w.lower() for w in np.surface.split()]
            for word in np.normalized.split()[:-1]:
                assert word in surface_words
        assert doc.noun_phrases

    def test_default_pipeline_function(self):
        doc = preprocess_document("A train passes.")
        assert len(doc.sentences) == 1
