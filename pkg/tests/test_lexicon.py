"""WordNet flat-file loading, membership queries, and morphy."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wikiharvest.lexicon import (MalformedLine, MissingFile, contains_lemma,
                                 load_wordnet, morphy)
from wikiharvest.preprocess import ADJ, ADV, NOUN, VERB


class TestLoad:
    def test_contains_rover(self, mini_wordnet):
        assert "rover" in mini_wordnet.entries[NOUN]

    def test_multiword_phrase_absent(self, mini_wordnet):
        assert not contains_lemma(mini_wordnet, "lunar rover")

    def test_empty_directory_missing_file(self, tmp_path):
        with pytest.raises(MissingFile):
            load_wordnet(tmp_path)

    def test_partial_directory_missing_file(self, tmp_path, fixtures_dir):
        src = fixtures_dir / "wordnet_mini"
        (tmp_path / "index.noun").write_text(
            (src / "index.noun").read_text("utf-8"))
        with pytest.raises(MissingFile) as exc:
            load_wordnet(tmp_path)
        assert "index" in str(exc.value)

    def test_malformed_exception_line(self, tmp_path, fixtures_dir):
        src = fixtures_dir / "wordnet_mini"
        for name in ("index.noun", "index.verb", "index.adj", "index.adv"):
            (tmp_path / name).write_text((src / name).read_text("utf-8"))
        (tmp_path / "noun.exc").write_text("geese goose\nonlyoneword\n")
        with pytest.raises(MalformedLine) as exc:
            load_wordnet(tmp_path)
        assert "noun.exc" in str(exc.value) and ":2" in str(exc.value)

    def test_license_header_skipped(self, mini_wordnet):
        # header lines start with spaces and must not become lemmas
        for lemmas in mini_wordnet.entries.values():
            assert not any(lemma.startswith(" ") or lemma[0].isdigit()
                           for lemma in lemmas)

    def test_load_twice_identical(self, fixtures_dir):
        a = load_wordnet(fixtures_dir / "wordnet_mini")
        b = load_wordnet(fixtures_dir / "wordnet_mini")
        assert a.entries == b.entries
        assert a.exceptions == b.exceptions
        assert a.source_version == b.source_version

    def test_underscores_decoded(self, tmp_path, fixtures_dir):
        src = fixtures_dir / "wordnet_mini"
        for name in ("index.verb", "index.adj", "index.adv"):
            (tmp_path / name).write_text((src / name).read_text("utf-8"))
        (tmp_path / "index.noun").write_text("lunar_module n 1 0 1 0 00000001\n")
        lex = load_wordnet(tmp_path)
        assert contains_lemma(lex, "lunar module")


class TestContainsLemma:
    def test_single_word_present(self, mini_wordnet):
        assert contains_lemma(mini_wordnet, "rover")

    def test_multiword_absent(self, mini_wordnet):
        assert not contains_lemma(mini_wordnet, "lunar rover")

    def test_empty_phrase(self, mini_wordnet):
        assert not contains_lemma(mini_wordnet, "")
        assert not contains_lemma(mini_wordnet, "   ")

    @given(st.sampled_from(["rover", "track", "communication", "goose",
                            "emergency", "brake", "lunar rover", "xyzzy"]),
           st.sampled_from(["", " ", "  "]),
           st.booleans())
    @settings(max_examples=60)
    def test_case_and_whitespace_normalized(self, mini_wordnet, phrase,
                                            pad, upper):
        variant = (pad + (phrase.upper() if upper else phrase) + pad)
        assert contains_lemma(mini_wordnet, variant) == \
            contains_lemma(mini_wordnet, phrase)


class TestMorphy:
    def test_regular_plural(self, mini_wordnet):
        assert morphy(mini_wordnet, "communications", NOUN) == "communication"

    def test_exception_list(self, mini_wordnet):
        assert morphy(mini_wordnet, "geese", NOUN) == "goose"

    def test_unknown_word_absent(self, mini_wordnet):
        assert morphy(mini_wordnet, "xyzzy", NOUN) is None

    def test_verb_exception(self, mini_wordnet):
        assert morphy(mini_wordnet, "transmitted", VERB) == "transmit"

    def test_identity_when_in_index(self, mini_wordnet):
        assert morphy(mini_wordnet, "rover", NOUN) == "rover"

    def test_adjective_comparative(self, mini_wordnet):
        assert morphy(mini_wordnet, "bigger", ADJ) == "big"

    def test_adverb_no_rules(self, mini_wordnet):
        assert morphy(mini_wordnet, "immediately", ADV) == "immediately"
        assert morphy(mini_wordnet, "faster", ADV) is None

    def test_result_always_in_lexicon(self, mini_wordnet):
        suffixes = ["", "s", "es", "ies", "ed", "ing", "er", "est", "men"]
        for pos in (NOUN, VERB, ADJ, ADV):
            for lemma in sorted(mini_wordnet.entries[pos])[:30]:
                for suffix in suffixes:
                    base = morphy(mini_wordnet, lemma + suffix, pos)
                    if base is not None:
                        assert contains_lemma(mini_wordnet, base)
