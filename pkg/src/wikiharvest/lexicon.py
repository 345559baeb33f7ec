"""WordNet 3.x flat-file lexicon: lemma membership and base-form search.

Reads the standard database layout (``index.noun``/``verb``/``adj``/``adv``
plus the ``*.exc`` exception lists).  Only lemma presence is kept; synsets,
glosses and pointers are ignored.  The base-form search follows the classic
morphy procedure: exception lists first, then iterated suffix detachment,
accepting the first candidate present in the index.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Optional

from .errors import WikiHarvestError
from .preprocess import ADJ, ADV, NOUN, VERB


class MissingFile(WikiHarvestError):
    """A required WordNet database file is absent."""


class MalformedLine(WikiHarvestError):
    """A WordNet database line could not be parsed."""


_POS_FILES = {
    NOUN: ("index.noun", "noun.exc"),
    VERB: ("index.verb", "verb.exc"),
    ADJ: ("index.adj", "adj.exc"),
    ADV: ("index.adv", "adv.exc"),
}

# Standard morphy suffix-detachment rules, per part of speech.
DETACHMENT_RULES: Mapping[str, tuple[tuple[str, str], ...]] = {
    NOUN: (
        ("s", ""), ("ses", "s"), ("ves", "f"), ("xes", "x"), ("zes", "z"),
        ("ches", "ch"), ("shes", "sh"), ("men", "man"), ("ies", "y"),
    ),
    VERB: (
        ("s", ""), ("ies", "y"), ("es", "e"), ("es", ""),
        ("ed", "e"), ("ed", ""), ("ing", "e"), ("ing", ""),
    ),
    ADJ: (("er", ""), ("est", ""), ("er", "e"), ("est", "e")),
    ADV: (),
}


@dataclass(frozen=True)
class WordnetLexicon:
    """Immutable lemma index loaded from one WordNet directory."""

    entries: Mapping[str, frozenset[str]]          # pos -> lemmas
    exceptions: Mapping[str, Mapping[str, tuple[str, ...]]]  # pos -> form -> bases
    source_version: str = ""

    def __contains__(self, phrase: str) -> bool:
        return contains_lemma(self, phrase)


def _parse_index(path: Path) -> frozenset[str]:
    lemmas = set()
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.startswith(" ") or not line.strip():
                continue  # license header / padding
            fields = line.split()
            if len(fields) < 2:
                raise MalformedLine(f"{path}:{lineno}: expected lemma and pos")
            lemmas.add(fields[0].replace("_", " ").lower())
    return frozenset(lemmas)


def _parse_exceptions(path: Path, entries: frozenset[str]) -> dict[str, tuple[str, ...]]:
    table: dict[str, tuple[str, ...]] = {}
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if line.startswith(" ") or not line.strip():
                continue
            fields = line.split()
            if len(fields) < 2:
                raise MalformedLine(
                    f"{path}:{lineno}: expected inflected form and base form")
            form = fields[0].replace("_", " ").lower()
            bases = tuple(
                b for b in (f.replace("_", " ").lower() for f in fields[1:])
                if b in entries
            )
            if bases:
                table[form] = bases
    return table


def load_wordnet(directory_path: str | Path) -> WordnetLexicon:
    """Load the index and exception files from a WordNet directory."""
    root = Path(directory_path)
    entries: dict[str, frozenset[str]] = {}
    exceptions: dict[str, dict[str, tuple[str, ...]]] = {}
    digest = hashlib.sha256()
    for pos, (index_name, exc_name) in _POS_FILES.items():
        index_path = root / index_name
        if not index_path.is_file():
            raise MissingFile(f"missing WordNet index file: {index_path}")
        entries[pos] = _parse_index(index_path)
        digest.update(index_name.encode())
        digest.update(index_path.read_bytes())
        exc_path = root / exc_name
        exceptions[pos] = (_parse_exceptions(exc_path, entries[pos])
                           if exc_path.is_file() else {})
    return WordnetLexicon(entries=entries, exceptions=exceptions,
                          source_version=digest.hexdigest()[:12])


def _normalize_phrase(phrase: str) -> str:
    return " ".join(phrase.lower().split())


def contains_lemma(lexicon: WordnetLexicon, phrase: str) -> bool:
    """True iff the full phrase is a lemma in any part-of-speech index."""
    norm = _normalize_phrase(phrase)
    if not norm:
        return False
    return any(norm in lemmas for lemmas in lexicon.entries.values())


def morphy(lexicon: WordnetLexicon, surface: str, pos: str) -> Optional[str]:
    """Base form of `surface` for the given POS, or None if not found.

    Checks the exception list, then applies detachment rules repeatedly,
    returning the first candidate that exists in the index.
    """
    entries = lexicon.entries.get(pos)
    if entries is None:
        return None
    form = _normalize_phrase(surface)
    if not form:
        return None
    rules = DETACHMENT_RULES[pos]

    exceptional = lexicon.exceptions.get(pos, {}).get(form)
    if exceptional:
        for candidate in (form,) + exceptional:
            if candidate in entries:
                return candidate
        return None

    def apply_rules(forms: list[str]) -> list[str]:
        return [f[: -len(old)] + new
                for f in forms
                for old, new in rules
                if f.endswith(old)]

    forms = apply_rules([form])
    for candidate in [form] + forms:
        if candidate in entries:
            return candidate
    while forms:
        forms = apply_rules(forms)
        for candidate in forms:
            if candidate in entries:
                return candidate
    return None


def make_lemmatizer(lexicon: WordnetLexicon):
    """Adapter giving the preprocess pipeline a (surface, pos) lemmatizer."""
    def lemmatizer(surface: str, pos: str) -> Optional[str]:
        return morphy(lexicon, surface, pos)
    return lemmatizer
