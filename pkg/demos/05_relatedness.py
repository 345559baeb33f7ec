#!/usr/bin/env python3
# How domain-representative is a corpus?  Embed each article and a
# held-out requirements specification as mean word vectors, then report
# the min/avg/max cosine similarity.

from pathlib import Path

from wikiharvest.corpus import load_corpus
from wikiharvest.relatedness import (cosine, embed_document,
                                     embed_document_with_stats, evaluate,
                                     load_vectors)

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

table = load_vectors(FIXTURES / "vectors_toy.txt")
print(f"embedding table: {len(table.vectors)} tokens, "
      f"dimension {table.dimension}")

# document vectors are plain means of in-vocabulary token vectors
vec, in_vocab, oov = embed_document_with_stats(
    "traffic flows along the road", table)
print(f"sample embedding uses {in_vocab} in-vocabulary tokens "
      f"({oov} out-of-vocabulary)")
same = cosine(vec, embed_document("road traffic", table))
print(f"cosine against a related snippet: {same:.4f}\n")

corpus = load_corpus(FIXTURES / "transport_corpus")
test_rs = (FIXTURES / "transport_test_rs.txt").read_text("utf-8")
report = evaluate(corpus, test_rs, table)

print(f"per-article cosine scores against the held-out RS "
      f"({len(report.per_article)} articles):")
for page_id, score in report.per_article:
    print(f"  {page_id}: {score:.4f}")
print(f"\nmin={report.min:.4f} avg={report.avg:.4f} max={report.max:.4f} "
      f"oov_rate={report.oov_rate:.4f}")
