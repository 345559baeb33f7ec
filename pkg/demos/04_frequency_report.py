#!/usr/bin/env python3
# The term-frequency report behind word-cloud style corpus summaries:
# lemma counts over every article, stopwords and numbers dropped.

from pathlib import Path

from wikiharvest.corpus import frequency_report, load_corpus
from wikiharvest.lexicon import load_wordnet, make_lemmatizer
from wikiharvest.preprocess import Pipeline

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

corpus = load_corpus(FIXTURES / "transport_corpus")
print(f"corpus: {len(corpus)} articles "
      f"(created {corpus.manifest.created_at})")
for entry in corpus.manifest.articles[:5]:
    print(f"  {entry['page_id']}  {entry['title']}")
print("  ...\n")

lexicon = load_wordnet(FIXTURES / "wordnet_mini")
pipeline = Pipeline(lemmatizer=make_lemmatizer(lexicon))

report = frequency_report(corpus, top_n=15, pipeline=pipeline)
width = max(len(term) for term, _count in report.entries)
for term, count in report.entries:
    print(f"{term:<{width}}  {'#' * min(count, 60)} {count}")
