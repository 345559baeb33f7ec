"""MediaWiki crawling: keyword search, category traversal, text extracts.

All requests go through a transport with an on-disk response cache keyed
by the canonical request URL.  With a warm cache the crawler runs fully
offline; in `offline` mode a cache miss is a hard error, which is what
makes recorded crawls replayable byte-for-byte.

Expansion is breadth-first over the category graph.  Depth 0 keeps only
the directly matched seed articles; depth d additionally includes the
pages of every category within d-1 subcategory hops of a seed's own
categories.  A visited set makes traversal terminate on the cyclic
category graph, and results are merged level by level in category order
so the output is independent of fetch interleaving.
"""

from __future__ import annotations

import json
import hashlib
import logging
import os
import tempfile
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator, Mapping, Optional, Sequence
from urllib.parse import urlencode

from . import __version__
from .errors import WikiHarvestError
from .preprocess import NOUN, Lemmatizer, default_stopwords, tokenize

log = logging.getLogger(__name__)

DEFAULT_ENDPOINT = "https://en.wikipedia.org/w/api.php"
DEFAULT_USER_AGENT = f"wikiharvest/{__version__}"

ARTICLE_NAMESPACE = 0
CATEGORY_NAMESPACE = 14


class CrawlerError(WikiHarvestError):
    pass


class NetworkError(CrawlerError):
    """Transport-level failure after retries were exhausted."""


class OfflineCacheMiss(NetworkError):
    """Offline mode requested a URL that is not in the cache."""


class ApiError(CrawlerError):
    """The MediaWiki API answered with an error payload or bad status."""


class PageMissing(CrawlerError):
    pass


@dataclass(frozen=True)
class ArticleRef:
    title: str
    page_id: int
    namespace: int = ARTICLE_NAMESPACE


@dataclass(frozen=True)
class CategoryRef:
    title: str
    page_id: int


@dataclass(frozen=True)
class CrawlConfig:
    depth: int = 1
    max_articles: int = 5000
    request_delay_ms: int = 100
    cache_dir: Optional[Path] = None
    user_agent: str = DEFAULT_USER_AGENT
    workers: int = 1

    def __post_init__(self):
        if self.depth < 0:
            raise ValueError(f"depth must be >= 0, got {self.depth}")
        if self.max_articles < 1:
            raise ValueError(f"max_articles must be >= 1, got {self.max_articles}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class CrawlResult:
    seeds: tuple[tuple[str, Optional[ArticleRef]], ...]
    articles: tuple[ArticleRef, ...]
    frontier_truncated: bool


# ---------------------------------------------------------------------------
# request construction


def canonical_url(endpoint: str, params: Mapping[str, str]) -> str:
    """Deterministic URL for a request: sorted, URL-encoded parameters."""
    return endpoint + "?" + urlencode(sorted(params.items()))


def _base_params() -> dict[str, str]:
    return {"action": "query", "format": "json", "formatversion": "2"}


def search_params(keyword: str, limit: int = 5) -> dict[str, str]:
    params = _base_params()
    params.update({
        "generator": "search",
        "gsrsearch": keyword,
        "gsrnamespace": "0",
        "gsrlimit": str(limit),
        "prop": "pageprops",
        "ppprop": "disambiguation",
    })
    return params


def categories_params(page_id: int) -> dict[str, str]:
    params = _base_params()
    params.update({
        "generator": "categories",
        "gclshow": "!hidden",
        "gcllimit": "500",
        "pageids": str(page_id),
    })
    return params


def members_params(category_title: str) -> dict[str, str]:
    params = _base_params()
    params.update({
        "list": "categorymembers",
        "cmtitle": category_title,
        "cmtype": "page|subcat",
        "cmlimit": "500",
    })
    return params


def extract_params(page_id: int) -> dict[str, str]:
    params = _base_params()
    params.update({
        "prop": "extracts",
        "explaintext": "1",
        "redirects": "1",
        "pageids": str(page_id),
    })
    return params


# ---------------------------------------------------------------------------
# transport

# A fetcher performs one HTTP GET: (url, headers) -> (status_code, body).
Fetcher = Callable[[str, Mapping[str, str]], tuple[int, str]]


def _requests_fetcher(url: str, headers: Mapping[str, str]) -> tuple[int, str]:
    import requests

    try:
        resp = requests.get(url, headers=dict(headers), timeout=30)
    except requests.RequestException as exc:
        raise NetworkError(f"{url}: {exc}") from exc
    return resp.status_code, resp.text


class CachedTransport:
    """HTTP layer with disk cache, retries, and per-worker politeness delay.

    Cache layout: ``<cache_dir>/<sha256(canonical_url)>.json``.  Cache hits
    never touch the network and never sleep; in offline mode a miss raises
    :class:`OfflineCacheMiss`.
    """

    def __init__(self,
                 endpoint: str = DEFAULT_ENDPOINT,
                 cache_dir: str | Path | None = None,
                 offline: bool = False,
                 user_agent: str = DEFAULT_USER_AGENT,
                 request_delay_ms: int = 100,
                 fetcher: Fetcher | None = None,
                 max_attempts: int = 3,
                 backoff_ms: int = 500):
        self.endpoint = endpoint
        self.cache_dir = Path(cache_dir) if cache_dir is not None else None
        self.offline = offline
        self.user_agent = user_agent
        self.request_delay_ms = request_delay_ms
        self.fetcher = fetcher or _requests_fetcher
        self.max_attempts = max_attempts
        self.backoff_ms = backoff_ms
        self.network_requests = 0
        self._count_lock = threading.Lock()
        self._local = threading.local()

    def cache_path(self, url: str) -> Optional[Path]:
        if self.cache_dir is None:
            return None
        digest = hashlib.sha256(url.encode("utf-8")).hexdigest()
        return self.cache_dir / f"{digest}.json"

    def get(self, params: Mapping[str, str]) -> dict:
        url = canonical_url(self.endpoint, params)
        path = self.cache_path(url)
        if path is not None and path.is_file():
            return json.loads(path.read_text("utf-8"))
        if self.offline:
            raise OfflineCacheMiss(f"offline mode: no cached response for {url}")
        data = self._fetch(url)
        if "error" in data:
            raise ApiError(f"{url}: {data['error']}")
        if path is not None:
            self._write_cache(path, data)
        return data

    def _write_cache(self, path: Path, data: dict) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)

    def _polite_wait(self) -> None:
        if self.request_delay_ms <= 0:
            return
        last = getattr(self._local, "last_request", None)
        now = time.monotonic()
        if last is not None:
            remaining = self.request_delay_ms / 1000.0 - (now - last)
            if remaining > 0:
                time.sleep(remaining)
        self._local.last_request = time.monotonic()

    def _fetch(self, url: str) -> dict:
        last_error: Optional[NetworkError] = None
        for attempt in range(self.max_attempts):
            if attempt:
                time.sleep(self.backoff_ms * (2 ** (attempt - 1)) / 1000.0)
            self._polite_wait()
            try:
                status, body = self.fetcher(url, {"User-Agent": self.user_agent})
            except NetworkError as exc:
                last_error = exc
                log.warning("attempt %d failed: %s", attempt + 1, exc)
                continue
            except OSError as exc:
                last_error = NetworkError(f"{url}: {exc}")
                log.warning("attempt %d failed: %s", attempt + 1, exc)
                continue
            with self._count_lock:
                self.network_requests += 1
            if 500 <= status < 600:
                last_error = NetworkError(f"{url}: server error {status}")
                log.warning("attempt %d got status %d", attempt + 1, status)
                continue
            if status != 200:
                raise ApiError(f"{url}: unexpected HTTP status {status}")
            try:
                return json.loads(body)
            except json.JSONDecodeError as exc:
                raise ApiError(f"{url}: response is not JSON ({exc})") from exc
        assert last_error is not None
        raise last_error


# ---------------------------------------------------------------------------
# title matching


def content_token_set(text: str,
                      stopwords: frozenset[str] | None = None,
                      lemmatizer: Lemmatizer | None = None) -> set[str]:
    """Lowercased non-stopword word tokens with the head token lemmatized."""
    if stopwords is None:
        stopwords = default_stopwords()
    words = [t.surface.lower() for t in tokenize(text)
             if any(c.isalpha() for c in t.surface)]
    words = [w for w in words if w not in stopwords]
    if words and lemmatizer is not None:
        base = lemmatizer(words[-1], NOUN)
        if base:
            words[-1] = base
    return set(words)


def title_overlap(title: str, keyword: str, *,
                  stopwords: frozenset[str] | None = None,
                  lemmatizer: Lemmatizer | None = None,
                  min_shared: int = 1) -> bool:
    """True iff title and keyword share at least `min_shared` content tokens."""
    a = content_token_set(title, stopwords, lemmatizer)
    b = content_token_set(keyword, stopwords, lemmatizer)
    return len(a & b) >= min_shared


# ---------------------------------------------------------------------------
# client


class WikiClient:
    """Typed operations over the MediaWiki Action API."""

    def __init__(self, transport: CachedTransport,
                 search_limit: int = 5,
                 min_title_overlap: int = 1,
                 stopwords: frozenset[str] | None = None,
                 lemmatizer: Lemmatizer | None = None):
        self.transport = transport
        self.search_limit = search_limit
        self.min_title_overlap = min_title_overlap
        self.stopwords = stopwords if stopwords is not None else default_stopwords()
        self.lemmatizer = lemmatizer

    def _query_all(self, params: dict[str, str]) -> Iterator[dict]:
        """Issue a query and follow `continue` tokens until drained."""
        cont: dict[str, str] = {}
        while True:
            resp = self.transport.get({**params, **cont})
            yield resp
            raw = resp.get("continue")
            if not raw:
                return
            cont = {str(k): str(v) for k, v in raw.items()}

    def search_article(self, keyword: str) -> Optional[ArticleRef]:
        """Best full-text match whose title overlaps the keyword.

        Disambiguation pages are skipped; returns None when no acceptable
        result exists.
        """
        if not keyword.strip():
            raise ValueError("keyword must be non-empty")
        resp = self.transport.get(search_params(keyword, self.search_limit))
        pages = (resp.get("query") or {}).get("pages") or []
        for page in sorted(pages, key=lambda p: p.get("index", 1 << 30)):
            if page.get("missing"):
                continue
            if "disambiguation" in (page.get("pageprops") or {}):
                continue
            title = page["title"]
            if title_overlap(title, keyword, stopwords=self.stopwords,
                             lemmatizer=self.lemmatizer,
                             min_shared=self.min_title_overlap):
                return ArticleRef(title=title, page_id=page["pageid"],
                                  namespace=page.get("ns", ARTICLE_NAMESPACE))
        return None

    def list_categories(self, article: ArticleRef) -> list[CategoryRef]:
        """The article's non-hidden categories, sorted by page id."""
        cats: dict[int, CategoryRef] = {}
        for resp in self._query_all(categories_params(article.page_id)):
            for page in (resp.get("query") or {}).get("pages") or []:
                if page.get("missing") or page.get("ns") != CATEGORY_NAMESPACE:
                    continue
                cats[page["pageid"]] = CategoryRef(title=page["title"],
                                                   page_id=page["pageid"])
        return sorted(cats.values(), key=lambda c: c.page_id)

    def list_category_members(self, cat: CategoryRef,
                              ) -> tuple[list[ArticleRef], list[CategoryRef]]:
        """Direct members split into (article pages, subcategories)."""
        pages: dict[int, ArticleRef] = {}
        subcats: dict[int, CategoryRef] = {}
        for resp in self._query_all(members_params(cat.title)):
            for member in (resp.get("query") or {}).get("categorymembers") or []:
                if member["ns"] == ARTICLE_NAMESPACE:
                    pages[member["pageid"]] = ArticleRef(
                        title=member["title"], page_id=member["pageid"])
                elif member["ns"] == CATEGORY_NAMESPACE:
                    subcats[member["pageid"]] = CategoryRef(
                        title=member["title"], page_id=member["pageid"])
        return (sorted(pages.values(), key=lambda r: r.page_id),
                sorted(subcats.values(), key=lambda c: c.page_id))

    def fetch_article_text(self, article: ArticleRef) -> str:
        """Plain-text extract, following redirects; empty string if none."""
        resp = self.transport.get(extract_params(article.page_id))
        pages = (resp.get("query") or {}).get("pages") or []
        if not pages:
            raise PageMissing(f"page id {article.page_id}: no result")
        page = pages[0]
        if page.get("missing"):
            raise PageMissing(f"page id {article.page_id} does not exist")
        return page.get("extract") or ""


# ---------------------------------------------------------------------------
# expansion


def search_keywords(client: WikiClient, keywords: Sequence[str],
                    ) -> list[tuple[str, Optional[ArticleRef]]]:
    """Search every keyword in order, keeping misses as None."""
    matches = []
    for kw in keywords:
        ref = client.search_article(kw)
        log.info("search %r -> %s", kw, ref.title if ref else "(no match)")
        matches.append((kw, ref))
    return matches


def dedupe_seeds(matches: Sequence[tuple[str, Optional[ArticleRef]]],
                 ) -> list[ArticleRef]:
    seeds: dict[int, ArticleRef] = {}
    for _kw, ref in matches:
        if ref is not None:
            seeds.setdefault(ref.page_id, ref)
    return sorted(seeds.values(), key=lambda r: r.page_id)


def expand(client: WikiClient, seeds: Sequence[ArticleRef], cfg: CrawlConfig,
           seed_matches: Sequence[tuple[str, Optional[ArticleRef]]] | None = None,
           ) -> CrawlResult:
    """Breadth-first expansion of seed articles through the category graph."""
    articles: dict[int, ArticleRef] = {}
    truncated = False

    def add_pages(refs: Sequence[ArticleRef]) -> bool:
        nonlocal truncated
        for ref in refs:
            if ref.page_id in articles:
                continue
            if len(articles) >= cfg.max_articles:
                truncated = True
                return False
            articles[ref.page_id] = ref
        return True

    ordered_seeds = sorted({s.page_id: s for s in seeds}.values(),
                           key=lambda r: r.page_id)
    room_left = add_pages(ordered_seeds)

    if cfg.depth >= 1 and room_left and ordered_seeds:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            per_seed = list(pool.map(client.list_categories, ordered_seeds))
            frontier: dict[int, CategoryRef] = {}
            for cats in per_seed:
                for cat in cats:
                    frontier.setdefault(cat.page_id, cat)
            visited: set[int] = set(frontier)
            level = sorted(frontier.values(), key=lambda c: c.page_id)

            for hop in range(cfg.depth):
                if not level or truncated:
                    break
                log.info("expanding %d categories at hop %d", len(level), hop)
                member_lists = list(pool.map(client.list_category_members, level))
                next_level: dict[int, CategoryRef] = {}
                for (pages, subcats) in member_lists:
                    if not add_pages(pages):
                        break
                    if hop + 1 < cfg.depth:
                        for sc in subcats:
                            if sc.page_id not in visited:
                                next_level.setdefault(sc.page_id, sc)
                visited.update(next_level)
                level = sorted(next_level.values(), key=lambda c: c.page_id)

    result = tuple(sorted(articles.values(), key=lambda r: r.page_id))
    if seed_matches is None:
        seed_matches = [(s.title, s) for s in ordered_seeds]
    return CrawlResult(seeds=tuple(seed_matches), articles=result,
                       frontier_truncated=truncated)


def fetch_all_texts(client: WikiClient, articles: Sequence[ArticleRef],
                    workers: int = 1) -> list[tuple[ArticleRef, str]]:
    """Fetch extracts for all articles, returned in page-id order."""
    ordered = sorted(articles, key=lambda r: r.page_id)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        texts = list(pool.map(client.fetch_article_text, ordered))
    return list(zip(ordered, texts))
