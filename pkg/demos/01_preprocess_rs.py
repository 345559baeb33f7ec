#!/usr/bin/env python3
# Walk one requirements sentence through the six preprocessing stages:
# tokenize, sentence split, POS tag, lemmatize, stopword mark, NP chunk.

from pathlib import Path

from wikiharvest.lexicon import load_wordnet, make_lemmatizer
from wikiharvest.preprocess import Pipeline

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

text = (
    "The trainborne equipment shall apply the emergency brake "
    "when the permitted speed profile is exceeded. "
    "Communications with the radio block centre are transmitted continuously."
)

# the lemmatizer is backed by WordNet database files; the miniature test
# lexicon is enough for a demo
lexicon = load_wordnet(FIXTURES / "wordnet_mini")
pipeline = Pipeline(lemmatizer=make_lemmatizer(lexicon))

doc = pipeline.preprocess(text, source_id="demo")

print(f"{len(doc.sentences)} sentences\n")
for i, sentence in enumerate(doc.sentences):
    print(f"sentence {i}: {sentence.text}")
    for tok in sentence.tokens:
        stop = " (stopword)" if tok.is_stopword else ""
        print(f"  {tok.surface:<15} {tok.pos:<6} lemma={tok.lemma}{stop}")
    print()

print("noun phrases (normalized):")
for np in doc.noun_phrases:
    print(f"  {np.surface!r:<35} -> {np.normalized!r}")
