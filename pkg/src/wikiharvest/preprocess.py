"""Shallow NLP pipeline over requirements text.

The pipeline runs six stages in a fixed order: tokenize, sentence split,
POS tag, lemmatize, stopword mark, noun-phrase chunk.  Everything is
rule-based and deterministic: a curated most-frequent-tag lexicon with
suffix fallbacks does the tagging, and noun phrases are maximal matches
of the grammar ``DET? (ADJ|NOUN|PROPN|NUM)* (NOUN|PROPN)``.

All functions are pure; a configured :class:`Pipeline` is immutable and
safe to share between threads.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, replace
from functools import lru_cache
from importlib import resources
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .errors import WikiHarvestError

# Coarse part-of-speech tag set.
NOUN = "NOUN"
PROPN = "PROPN"
VERB = "VERB"
ADJ = "ADJ"
ADV = "ADV"
DET = "DET"
ADP = "ADP"
PUNCT = "PUNCT"
NUM = "NUM"
OTHER = "OTHER"

COARSE_TAGS = frozenset(
    {NOUN, PROPN, VERB, ADJ, ADV, DET, ADP, PUNCT, NUM, OTHER}
)

_NP_MODIFIER = frozenset({ADJ, NOUN, PROPN, NUM})
_NP_HEAD = frozenset({NOUN, PROPN})


class InvalidEncoding(WikiHarvestError):
    """Input bytes are not decodable as UTF-8 text."""


@dataclass(frozen=True)
class Token:
    """One token with its span into the (normalized) source text."""

    surface: str
    start: int
    end: int
    pos: str = ""
    lemma: str = ""
    is_stopword: bool = False

    @property
    def char_span(self) -> tuple[int, int]:
        return (self.start, self.end)


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    text: str
    start: int = 0  # offset of `text` within the source document


@dataclass(frozen=True)
class NounPhrase:
    surface: str
    normalized: str
    token_count: int


@dataclass(frozen=True)
class PreprocessedDoc:
    source_id: str
    sentences: tuple[Sentence, ...]
    noun_phrases: tuple[NounPhrase, ...]


# ---------------------------------------------------------------------------
# bundled data files


def _read_data_lines(name: str) -> tuple[str, ...]:
    text = resources.files("wikiharvest.data").joinpath(name).read_text("utf-8")
    return tuple(
        line.strip() for line in text.splitlines()
        if line.strip() and not line.startswith("#")
    )


@lru_cache(maxsize=None)
def default_stopwords() -> frozenset[str]:
    """The bundled English stopword list (lowercase)."""
    return frozenset(w.lower() for w in _read_data_lines("stopwords.txt"))


@lru_cache(maxsize=None)
def default_abbreviations() -> tuple[str, ...]:
    """Abbreviations whose trailing period never ends a sentence."""
    return _read_data_lines("abbreviations.txt")


@lru_cache(maxsize=None)
def default_tag_lexicon() -> Mapping[str, str]:
    """Most-frequent coarse tag per word, from the bundled lexicon file."""
    lex: dict[str, str] = {}
    for line in _read_data_lines("tag_lexicon.tsv"):
        word, _, tag = line.partition("\t")
        tag = tag.strip()
        if word and tag in COARSE_TAGS:
            lex.setdefault(word.lower(), tag)
    return lex


# ---------------------------------------------------------------------------
# tokenizer

_WORD_RE = r"[A-Za-z]+(?:['\-][A-Za-z]+)*"
_NUMBER_RE = r"\d+(?:[.,]\d+)*"


@lru_cache(maxsize=8)
def _token_regex(abbreviations: tuple[str, ...]) -> re.Pattern[str]:
    parts = []
    if abbreviations:
        escaped = sorted((re.escape(a) for a in abbreviations), key=len, reverse=True)
        parts.append("(?:%s)" % "|".join(escaped))
    parts.extend([_NUMBER_RE, _WORD_RE, r"\S"])
    return re.compile("|".join(parts))


def tokenize(text: str, abbreviations: Sequence[str] | None = None) -> list[Token]:
    """Split text into tokens covering every non-whitespace character.

    Punctuation marks become single-character tokens; listed abbreviations
    (e.g. "e.g.") keep their periods attached.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    rx = _token_regex(tuple(abbreviations))
    return [
        Token(surface=m.group(0), start=m.start(), end=m.end())
        for m in rx.finditer(text)
    ]


# ---------------------------------------------------------------------------
# sentence splitter

_TERMINATOR_RE = re.compile(r"[.!?]+$")
_PARAGRAPH_GAP_RE = re.compile(r"\n[ \t\r]*\n")


def _is_sentence_break(text: str, prev: Token, nxt: Token,
                       abbreviations: frozenset[str]) -> bool:
    gap = text[prev.end:nxt.start]
    if _PARAGRAPH_GAP_RE.search(gap):
        return True
    if not _TERMINATOR_RE.search(prev.surface):
        return False
    if prev.surface in abbreviations:
        return False
    if not gap or not gap.isspace():
        return False
    first = nxt.surface[0]
    return first.isupper() or first.isdigit()


def split_sentences(text: str, abbreviations: Sequence[str] | None = None,
                    tokens: Sequence[Token] | None = None) -> list[Sentence]:
    """Group text into sentences.

    A run of ``.!?`` followed by whitespace and an upper-case letter or
    digit ends a sentence, unless the preceding token is a known
    abbreviation; blank lines always end one.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    if tokens is None:
        tokens = tokenize(text, abbreviations)
    abbrev = frozenset(abbreviations)

    sentences: list[Sentence] = []
    current: list[Token] = []
    for tok in tokens:
        if current and _is_sentence_break(text, current[-1], tok, abbrev):
            sentences.append(_make_sentence(text, current))
            current = []
        current.append(tok)
    if current:
        sentences.append(_make_sentence(text, current))
    return sentences


def _make_sentence(text: str, toks: list[Token]) -> Sentence:
    start, end = toks[0].start, toks[-1].end
    return Sentence(tokens=tuple(toks), text=text[start:end], start=start)


# ---------------------------------------------------------------------------
# POS tagger

# Closed-class words are fixed here; open-class words come from the
# bundled most-frequent-tag lexicon with suffix rules as fallback.
_DETERMINERS = frozenset(
    "the a an this that these those each every either neither "
    "some any no all both another such many much most least few several "
    "various".split()
)
_PREPOSITIONS = frozenset(
    "in of on at by for with to from into onto upon about above below under "
    "over between among through during before after against within without "
    "across along around behind beyond near toward towards via per off "
    "until since despite throughout".split()
)
_PRONOUNS = frozenset(
    "i you he she it we they me him her us them its his their our your my "
    "mine yours hers ours theirs itself himself herself themselves "
    "ourselves myself yourself who whom whose which what".split()
)
_CONJUNCTIONS = frozenset(
    "and or but nor so yet if while although because unless whereas "
    "whether when where as than that once".split()
)
_AUXILIARIES = frozenset(
    "is are was were be been being am has have had having do does did "
    "shall will should would may might must can could need ought".split()
)
_NOT_WORDS = frozenset("not n't never also only just".split())

_NOUN_SUFFIXES = ("tion", "sion", "ment", "ness", "ance", "ence", "ity",
                  "ship", "ism", "ure", "age")
_ADJ_SUFFIXES = ("ous", "ful", "ive", "ible", "able", "ical", "less", "ary")
_VERB_SUFFIXES = ("ize", "ise", "ify")

_NUMERIC_RE = re.compile(r"^\d+(?:[.,]\d+)*$")
_NO_ALNUM_RE = re.compile(r"^[^\w]+$", re.UNICODE)


def _closed_class(lower: str) -> Optional[str]:
    if lower in _DETERMINERS:
        return DET
    if lower in _PREPOSITIONS:
        return ADP
    if lower in _AUXILIARIES:
        return VERB
    if lower in _PRONOUNS or lower in _CONJUNCTIONS or lower in _NOT_WORDS:
        return OTHER
    return None


def _stem_lookup(lower: str, tag_lexicon: Mapping[str, str]) -> Optional[str]:
    """Lexicon tag of a plural/3rd-person form via naive s-stripping."""
    if lower.endswith("ies") and len(lower) > 4:
        tag = tag_lexicon.get(lower[:-3] + "y")
        if tag:
            return tag
    if lower.endswith("es") and len(lower) > 3:
        tag = tag_lexicon.get(lower[:-2])
        if tag:
            return tag
    if lower.endswith("s") and len(lower) > 2:
        tag = tag_lexicon.get(lower[:-1])
        if tag:
            return tag
    return None


def _suffix_tag(lower: str, prev_tag: str) -> str:
    if lower.endswith("ly"):
        return ADV
    if lower.endswith(_NOUN_SUFFIXES):
        return NOUN
    if lower.endswith(_ADJ_SUFFIXES):
        return ADJ
    if lower.endswith(_VERB_SUFFIXES):
        return VERB
    if lower.endswith("ed"):
        if prev_tag in (DET, ADJ, NUM):
            return ADJ
        return VERB
    if lower.endswith("ing"):
        if prev_tag == VERB:
            return VERB
        if prev_tag in (DET, ADJ):
            return ADJ
        return NOUN
    return NOUN


def pos_tag(sentence_tokens: Sequence[Token],
            tag_lexicon: Mapping[str, str] | None = None) -> list[Token]:
    """Assign one coarse tag to every token; tagging is total."""
    if tag_lexicon is None:
        tag_lexicon = default_tag_lexicon()
    tagged: list[Token] = []
    prev_tag = ""
    for i, tok in enumerate(sentence_tokens):
        surface = tok.surface
        lower = surface.lower()
        if _NUMERIC_RE.match(surface):
            tag = NUM
        elif _NO_ALNUM_RE.match(surface):
            tag = PUNCT
        else:
            tag = _closed_class(lower)
            if tag is None:
                tag = tag_lexicon.get(lower)
            if tag is None:
                tag = _stem_lookup(lower, tag_lexicon)
            if tag is None:
                if i > 0 and surface[:1].isupper():
                    tag = PROPN
                else:
                    tag = _suffix_tag(lower, prev_tag)
        tagged.append(replace(tok, pos=tag))
        prev_tag = tag
    return tagged


# ---------------------------------------------------------------------------
# lemmatizer

# A lemmatizer maps (surface, coarse tag) to a base form, or None when it
# has no answer; `lemmatize` then falls back to the lowercased surface.
Lemmatizer = Callable[[str, str], Optional[str]]


def lemmatize(surface: str, pos: str, lemmatizer: Lemmatizer | None = None) -> str:
    """Base form of a word, falling back to the lowercased surface."""
    lower = surface.lower()
    if lemmatizer is not None and pos in (NOUN, VERB, ADJ, ADV):
        base = lemmatizer(lower, pos)
        if base:
            return base
    return lower


# ---------------------------------------------------------------------------
# noun-phrase chunker


def _strip_boundary_stopwords(tokens: list[Token]) -> list[Token]:
    while tokens and tokens[0].is_stopword:
        tokens = tokens[1:]
    while tokens and tokens[-1].is_stopword:
        tokens = tokens[:-1]
    return tokens


def _normalize_np(tokens: Sequence[Token],
                  lemmatizer: Lemmatizer | None) -> Optional[str]:
    kept = [t for t in tokens if t.pos != DET]
    kept = _strip_boundary_stopwords(list(kept))
    if not kept:
        return None
    words = [t.surface.lower() for t in kept[:-1]]
    head = kept[-1]
    head_lemma = head.lemma or lemmatize(head.surface, head.pos, lemmatizer)
    words.append(head_lemma)
    return " ".join(words)


def chunk_noun_phrases(tagged_sentence: Sequence[Token],
                       lemmatizer: Lemmatizer | None = None,
                       stopwords: frozenset[str] | None = None) -> list[NounPhrase]:
    """Maximal noun phrases of a tagged sentence.

    Matches ``DET? (ADJ|NOUN|PROPN|NUM)* (NOUN|PROPN)``, then strips the
    determiner and boundary stopwords and lemmatizes the head noun.
    """
    if stopwords is None:
        stopwords = default_stopwords()
    toks = [replace(t, is_stopword=t.surface.lower() in stopwords)
            for t in tagged_sentence]
    phrases: list[NounPhrase] = []
    n = len(toks)
    i = 0
    while i < n:
        j = i + 1 if toks[i].pos == DET else i
        last_head = -1
        k = j
        while k < n and toks[k].pos in _NP_MODIFIER:
            if toks[k].pos in _NP_HEAD:
                last_head = k
            k += 1
        if last_head < 0:
            i = max(k, i + 1)
            continue
        span = toks[i:last_head + 1]
        normalized = _normalize_np(span, lemmatizer)
        if normalized:
            phrases.append(NounPhrase(
                surface=" ".join(t.surface for t in span),
                normalized=normalized,
                token_count=len(span),
            ))
        i = last_head + 1
    return phrases


# ---------------------------------------------------------------------------
# pipeline


class Pipeline:
    """Configured six-stage preprocessor.

    Stages run in a fixed order: tokenize, sentence split, POS tag,
    lemmatize, stopword mark, NP chunk.  Configuration is read once at
    construction; instances are immutable and thread-safe.
    """

    def __init__(self,
                 stopwords: Iterable[str] | None = None,
                 abbreviations: Sequence[str] | None = None,
                 tag_lexicon: Mapping[str, str] | None = None,
                 lemmatizer: Lemmatizer | None = None):
        self.stopwords = (frozenset(w.lower() for w in stopwords)
                          if stopwords is not None else default_stopwords())
        self.abbreviations = (tuple(abbreviations) if abbreviations is not None
                              else default_abbreviations())
        self.tag_lexicon = (dict(tag_lexicon) if tag_lexicon is not None
                            else default_tag_lexicon())
        self.lemmatizer = lemmatizer

    def preprocess(self, text: str | bytes, source_id: str = "") -> PreprocessedDoc:
        """Run the full pipeline over one document."""
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise InvalidEncoding(
                    f"{source_id or 'input'}: not valid UTF-8 ({exc})") from exc
        text = unicodedata.normalize("NFC", text)

        raw_tokens = tokenize(text, self.abbreviations)
        raw_sentences = split_sentences(text, self.abbreviations, tokens=raw_tokens)

        sentences: list[Sentence] = []
        noun_phrases: list[NounPhrase] = []
        for sent in raw_sentences:
            tagged = pos_tag(sent.tokens, self.tag_lexicon)
            finished = tuple(
                replace(t,
                        lemma=lemmatize(t.surface, t.pos, self.lemmatizer),
                        is_stopword=t.surface.lower() in self.stopwords)
                for t in tagged
            )
            sentences.append(Sentence(tokens=finished, text=sent.text,
                                      start=sent.start))
            noun_phrases.extend(
                chunk_noun_phrases(finished, self.lemmatizer, self.stopwords))
        return PreprocessedDoc(source_id=source_id,
                               sentences=tuple(sentences),
                               noun_phrases=tuple(noun_phrases))

    __call__ = preprocess

    def content_tokens(self, text: str) -> list[str]:
        """Lowercased non-stopword word tokens (no tagging), for embeddings."""
        out = []
        for tok in tokenize(unicodedata.normalize("NFC", text),
                            self.abbreviations):
            lower = tok.surface.lower()
            if not any(c.isalpha() for c in lower):
                continue
            if lower in self.stopwords:
                continue
            out.append(lower)
        return out


_DEFAULT_PIPELINE: Pipeline | None = None


def _default_pipeline() -> Pipeline:
    global _DEFAULT_PIPELINE
    if _DEFAULT_PIPELINE is None:
        _DEFAULT_PIPELINE = Pipeline()
    return _DEFAULT_PIPELINE


def preprocess_document(text: str | bytes, source_id: str = "",
                        pipeline: Pipeline | None = None) -> PreprocessedDoc:
    """Preprocess one document with the given (or default) pipeline."""
    return (pipeline or _default_pipeline()).preprocess(text, source_id)
