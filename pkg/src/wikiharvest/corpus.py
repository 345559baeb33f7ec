"""Corpus persistence and term-frequency reporting.

A corpus directory holds one UTF-8 text file per article under
``articles/<page_id>.txt`` plus a ``manifest.json`` recording how the
corpus was produced.  Articles are keyed by page id, never by title, so
filesystem-hostile titles stay out of paths.
"""

from __future__ import annotations

import json
import os
import tempfile
import time
from collections import Counter
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from . import __version__
from .errors import WikiHarvestError
from .keywords import Keyword
from .preprocess import NUM, PUNCT, Pipeline


class CorpusError(WikiHarvestError):
    pass


class DuplicatePageId(CorpusError):
    pass


class ManifestMissing(CorpusError):
    pass


class IntegrityError(CorpusError):
    """Manifest and directory contents disagree."""


MANIFEST_NAME = "manifest.json"
ARTICLES_DIR = "articles"


@dataclass(frozen=True)
class CorpusManifest:
    rs_source_hash: str
    keywords: tuple[Keyword, ...]
    depth: int
    created_at: str
    articles: tuple[dict, ...]  # page_id, title, byte_length, relative_path
    tool_version: str
    wordnet_version: str

    def to_json(self) -> str:
        payload = {
            "rs_source_hash": self.rs_source_hash,
            "keywords": [
                {"phrase": kw.phrase, "tf": kw.tf, "idf": kw.idf,
                 "score": kw.score}
                for kw in self.keywords
            ],
            "depth": self.depth,
            "created_at": self.created_at,
            "articles": list(self.articles),
            "tool_version": self.tool_version,
            "wordnet_version": self.wordnet_version,
        }
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "CorpusManifest":
        data = json.loads(text)
        return cls(
            rs_source_hash=data["rs_source_hash"],
            keywords=tuple(Keyword(**kw) for kw in data["keywords"]),
            depth=data["depth"],
            created_at=data["created_at"],
            articles=tuple(data["articles"]),
            tool_version=data["tool_version"],
            wordnet_version=data["wordnet_version"],
        )


def _created_at_now() -> str:
    """UTC RFC 3339 timestamp; SOURCE_DATE_EPOCH pins it for reproducibility."""
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    ts = int(epoch) if epoch else int(time.time())
    return datetime.fromtimestamp(ts, tz=timezone.utc).strftime(
        "%Y-%m-%dT%H:%M:%SZ")


def write_corpus(articles_with_text: Iterable[tuple[int, str, str]],
                 out_dir: str | Path,
                 *,
                 rs_source_hash: str = "",
                 keywords: Sequence[Keyword] = (),
                 depth: int = 0,
                 wordnet_version: str = "",
                 created_at: str | None = None) -> CorpusManifest:
    """Write article texts and a manifest under `out_dir`.

    `articles_with_text` yields (page_id, title, text) triples.  The
    manifest is written atomically (temp file, then rename) as the final
    step, so a half-written directory never carries a valid manifest.
    """
    out = Path(out_dir)
    articles_dir = out / ARTICLES_DIR
    articles_dir.mkdir(parents=True, exist_ok=True)

    entries: list[dict] = []
    seen: set[int] = set()
    for page_id, title, text in articles_with_text:
        if page_id in seen:
            raise DuplicatePageId(f"page id {page_id} appears twice")
        seen.add(page_id)
        rel = f"{ARTICLES_DIR}/{page_id}.txt"
        data = text.encode("utf-8")
        (out / rel).write_bytes(data)
        entries.append({
            "page_id": page_id,
            "title": title,
            "byte_length": len(data),
            "relative_path": rel,
        })
    entries.sort(key=lambda e: e["page_id"])

    manifest = CorpusManifest(
        rs_source_hash=rs_source_hash,
        keywords=tuple(keywords),
        depth=depth,
        created_at=created_at if created_at is not None else _created_at_now(),
        articles=tuple(entries),
        tool_version=__version__,
        wordnet_version=wordnet_version,
    )
    fd, tmp_name = tempfile.mkstemp(dir=out, prefix=".manifest-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(manifest.to_json())
        os.replace(tmp_name, out / MANIFEST_NAME)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return manifest


class Corpus:
    """Read-only handle over a corpus directory, validated against its manifest."""

    def __init__(self, root: Path, manifest: CorpusManifest):
        self.root = root
        self.manifest = manifest

    def __len__(self) -> int:
        return len(self.manifest.articles)

    def __iter__(self) -> Iterator[tuple[int, str, str]]:
        for entry in self.manifest.articles:
            yield entry["page_id"], entry["title"], self.read_text(entry)

    def read_text(self, entry: dict) -> str:
        return (self.root / entry["relative_path"]).read_text("utf-8")

    def texts(self) -> Iterator[str]:
        for _pid, _title, text in self:
            yield text


def load_corpus(directory: str | Path) -> Corpus:
    """Open a corpus directory, checking manifest integrity."""
    root = Path(directory)
    manifest_path = root / MANIFEST_NAME
    if not manifest_path.is_file():
        raise ManifestMissing(f"no {MANIFEST_NAME} in {root}")
    manifest = CorpusManifest.from_json(manifest_path.read_text("utf-8"))

    seen: set[int] = set()
    for entry in manifest.articles:
        pid = entry["page_id"]
        if pid in seen:
            raise IntegrityError(f"duplicate page id {pid} in manifest")
        seen.add(pid)
        path = root / entry["relative_path"]
        if not path.is_file():
            raise IntegrityError(f"missing article file: {path}")
        actual = path.stat().st_size
        if actual != entry["byte_length"]:
            raise IntegrityError(
                f"{path}: byte_length {entry['byte_length']} in manifest, "
                f"{actual} on disk")
    return Corpus(root=root, manifest=manifest)


@dataclass(frozen=True)
class FrequencyReport:
    entries: tuple[tuple[str, int], ...]  # (term, count), count desc then term

    def to_tsv(self) -> str:
        return "".join(f"{term}\t{count}\n" for term, count in self.entries)


def frequency_report(corpus: Corpus, top_n: int | None = None,
                     pipeline: Pipeline | None = None) -> FrequencyReport:
    """Lemma frequencies over all article text.

    Stopwords, punctuation, numbers and single-character terms are
    dropped; the rest are counted by lemma.
    """
    pipeline = pipeline or Pipeline()
    counts: Counter[str] = Counter()
    for text in corpus.texts():
        doc = pipeline.preprocess(text)
        for sentence in doc.sentences:
            for tok in sentence.tokens:
                if tok.is_stopword or tok.pos in (PUNCT, NUM):
                    continue
                term = tok.lemma
                if len(term) <= 1 or term.isdigit():
                    continue
                counts[term] += 1
    ordered = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    if top_n is not None:
        ordered = ordered[:top_n]
    return FrequencyReport(entries=tuple(ordered))
