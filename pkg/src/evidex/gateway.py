"""Query building and federated search across three news tiers plus a
scholarly index.

All engine traffic goes through a record/replay fixture layer keyed by
sha256 of the rendered query, so the whole pipeline runs bit-exact offline
without spending API quota. Live clients speak the Google programmable
search JSON API for news tiers and a Scopus-style REST surface for
publications and author profiles.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import json
import logging
import threading
from dataclasses import dataclass, field
from pathlib import Path

import requests

from .config import MODE_RECORD, MODE_REPLAY, EvidexConfig
from .errors import EmptySelection, EngineError, FixtureMiss, MalformedUrl, QuotaExceeded
from .keywords import KeywordSelection
from .registry import KIND_DENIED, SourceRegistry
from .textproc import normalize_phrase
from .urls import canonical_url

logger = logging.getLogger(__name__)

ENGINE_MAINSTREAM = "mainstream"
ENGINE_SCIENTIFIC = "scientific"
ENGINE_GENERAL = "general"
ENGINE_SCHOLAR = "scholar"
PROFILE_STORE = "profiles"

NEWS_ENGINES = (ENGINE_MAINSTREAM, ENGINE_SCIENTIFIC, ENGINE_GENERAL)

_GOOGLE_CSE_ENDPOINT = "https://www.googleapis.com/customsearch/v1"
_SCHOLAR_SEARCH_ENDPOINT = "https://api.elsevier.com/content/search/scopus"
_SCHOLAR_AUTHOR_ENDPOINT = "https://api.elsevier.com/content/author/author_id"

# Schema.org restriction appended by the live general-tier client only.
_NEWSARTICLE_REFINEMENT = "more:pagemap:newsarticle"


def _sanitize(phrase: str) -> str:
    """Strip query-structure characters from a user phrase.

    Double quotes and the literal " AND " separator are removed so a phrase
    can never change the boolean structure of the rendered query.
    """
    phrase = phrase.replace('"', "")
    while " AND " in phrase:
        phrase = phrase.replace(" AND ", " ")
    return normalize_phrase(phrase)


def _ordered_phrases(sel: KeywordSelection) -> list[str]:
    phrases = []
    for raw in sel.phrases():
        cleaned = _sanitize(raw)
        if cleaned and cleaned not in phrases:
            phrases.append(cleaned)
    if not phrases:
        raise EmptySelection("no usable phrases in selection")
    return phrases


@dataclass(frozen=True)
class NewsQuery:
    keywords: tuple[str, ...]
    rendered: str


@dataclass(frozen=True)
class ScholarQuery:
    keywords: tuple[str, ...]
    rendered: str


def build_news_query(sel: KeywordSelection) -> NewsQuery:
    phrases = _ordered_phrases(sel)
    return NewsQuery(keywords=tuple(phrases), rendered=" AND ".join(phrases))


def build_scholar_query(sel: KeywordSelection) -> ScholarQuery:
    phrases = _ordered_phrases(sel)
    rendered = " AND ".join(f'"{p}"' for p in phrases)
    return ScholarQuery(keywords=tuple(phrases), rendered=rendered)


def parse_news_query(rendered: str) -> list[str]:
    return rendered.split(" AND ") if rendered else []


def parse_scholar_query(rendered: str) -> list[str]:
    parts = rendered.split(" AND ") if rendered else []
    out = []
    for part in parts:
        if len(part) >= 2 and part.startswith('"') and part.endswith('"'):
            part = part[1:-1]
        out.append(part)
    return out


@dataclass(frozen=True)
class SearchHit:
    url: str
    title: str
    snippet: str
    engine: str           # mainstream | scientific | general
    rank_in_engine: int   # 1-based


@dataclass(frozen=True)
class Author:
    author_id: str
    display_name: str


@dataclass(frozen=True)
class PublicationRecord:
    id: str
    title: str
    venue: str
    year: int
    abstract: str
    authors: tuple[Author, ...]
    relevance_rank: int


def aggregate_hits(
    mainstream: list[SearchHit],
    scientific: list[SearchHit],
    general: list[SearchHit],
) -> list[SearchHit]:
    """Mainstream ++ scientific ++ general, deduplicated on canonical URL.

    The first occurrence wins, so a story already found on a curated outlet
    is not repeated when the open-web tier returns it again.
    """
    out: list[SearchHit] = []
    seen: set[str] = set()
    for hit in [*mainstream, *scientific, *general]:
        try:
            key = canonical_url(hit.url)
        except MalformedUrl:
            key = hit.url
        if key in seen:
            continue
        seen.add(key)
        out.append(hit)
    return out


class FixtureStore:
    """Recorded engine responses: fixtures/{engine_id}/{sha256(key)}.json."""

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def path(self, engine_id: str, key: str) -> Path:
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return self.root / engine_id / f"{digest}.json"

    def load(self, engine_id: str, key: str) -> dict:
        path = self.path(engine_id, key)
        if not path.exists():
            raise FixtureMiss(f"no fixture for {engine_id} query {key!r}")
        return json.loads(path.read_text("utf-8"))

    def save(self, engine_id: str, key: str, payload: dict) -> Path:
        path = self.path(engine_id, key)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", "utf-8")
        return path


class GoogleCseClient:
    """Thin client for one programmable search engine instance."""

    def __init__(self, api_key: str, cx: str, user_agent: str, timeout: float,
                 session: requests.Session | None = None,
                 semaphore: threading.Semaphore | None = None):
        self.api_key = api_key
        self.cx = cx
        self.user_agent = user_agent
        self.timeout = timeout
        self.session = session or requests.Session()
        self.semaphore = semaphore or threading.Semaphore(4)

    def search(self, query: str, max_results: int) -> list[dict]:
        params = {
            "key": self.api_key,
            "cx": self.cx,
            "q": query,
            "num": min(max_results, 10),
        }
        with self.semaphore:
            try:
                resp = self.session.get(
                    _GOOGLE_CSE_ENDPOINT,
                    params=params,
                    headers={"User-Agent": self.user_agent},
                    timeout=self.timeout,
                )
            except requests.RequestException as exc:
                raise EngineError(f"search request failed: {exc}") from exc
        if resp.status_code == 429:
            raise QuotaExceeded()
        if resp.status_code != 200:
            raise EngineError(f"search returned HTTP {resp.status_code}", resp.status_code)
        items = resp.json().get("items", [])
        return [
            {
                "url": item.get("link", ""),
                "title": item.get("title", ""),
                "snippet": item.get("snippet", ""),
            }
            for item in items
        ]


class ScopusStyleClient:
    """Live scholarly search + author retrieval against a Scopus-like API."""

    def __init__(self, api_key: str, user_agent: str, timeout: float,
                 session: requests.Session | None = None,
                 search_endpoint: str = _SCHOLAR_SEARCH_ENDPOINT,
                 author_endpoint: str = _SCHOLAR_AUTHOR_ENDPOINT):
        self.api_key = api_key
        self.user_agent = user_agent
        self.timeout = timeout
        self.session = session or requests.Session()
        self.search_endpoint = search_endpoint
        self.author_endpoint = author_endpoint

    def _get(self, url: str, params: dict) -> dict:
        try:
            resp = self.session.get(
                url,
                params=params,
                headers={
                    "User-Agent": self.user_agent,
                    "X-ELS-APIKey": self.api_key,
                    "Accept": "application/json",
                },
                timeout=self.timeout,
            )
        except requests.RequestException as exc:
            raise EngineError(f"scholar request failed: {exc}") from exc
        if resp.status_code == 429:
            raise QuotaExceeded()
        if resp.status_code != 200:
            raise EngineError(f"scholar API returned HTTP {resp.status_code}", resp.status_code)
        return resp.json()

    def search(self, query: str, max_results: int) -> list[dict]:
        payload = self._get(self.search_endpoint, {"query": query, "count": max_results})
        entries = payload.get("search-results", {}).get("entry", [])
        records = []
        for entry in entries:
            year_raw = str(entry.get("prism:coverDate", ""))[:4]
            records.append({
                "id": entry.get("dc:identifier", ""),
                "title": entry.get("dc:title", ""),
                "venue": entry.get("prism:publicationName", ""),
                "year": int(year_raw) if year_raw.isdigit() else 0,
                "abstract": entry.get("dc:description", ""),
                "authors": [
                    {"author_id": a.get("authid", ""), "display_name": a.get("authname", "")}
                    for a in entry.get("author", [])
                ],
            })
        return records

    def author_profile(self, author_id: str) -> dict:
        payload = self._get(f"{self.author_endpoint}/{author_id}", {"view": "ENHANCED"})
        profile = payload.get("author-retrieval-response", [{}])
        profile = profile[0] if profile else {}
        core = profile.get("coredata", {})
        preferred = profile.get("author-profile", {}).get("preferred-name", {})
        name = " ".join(
            p for p in (preferred.get("given-name"), preferred.get("surname")) if p
        )
        subjects = [
            s.get("$", "") for s in profile.get("subject-areas", {}).get("subject-area", [])
        ]
        return {
            "registries": {
                "scopus": {
                    "name": name,
                    "affiliation": core.get("affiliation-current", {}).get("affiliation-name", ""),
                    "profile_url": core.get("link", [{}])[0].get("@href", ""),
                    "subject_areas": [s for s in subjects if s],
                    "email": "",
                    "homepage": "",
                }
            }
        }


class SearchGateway:
    """Mode-aware front door for every external search surface."""

    def __init__(self, config: EvidexConfig, registry: SourceRegistry,
                 session: requests.Session | None = None):
        self.config = config
        self.registry = registry
        self.session = session or requests.Session()
        self.store = FixtureStore(config.fixtures_dir) if config.fixtures_dir else None
        self._semaphore = threading.Semaphore(config.max_concurrent_requests)
        self._news_clients: dict[str, GoogleCseClient] = {}
        self._scholar_client: ScopusStyleClient | None = None

    # -- client wiring --

    def _news_client(self, engine_id: str) -> GoogleCseClient:
        client = self._news_clients.get(engine_id)
        if client is not None:
            return client
        cx = {
            ENGINE_MAINSTREAM: self.config.cx_mainstream,
            ENGINE_SCIENTIFIC: self.config.cx_scientific,
            ENGINE_GENERAL: self.config.cx_general,
        }.get(engine_id, "")
        if not self.config.search_key or not cx:
            raise EngineError(f"news engine {engine_id!r} is not configured")
        client = GoogleCseClient(
            self.config.search_key, cx, self.config.user_agent,
            self.config.timeout, self.session, self._semaphore,
        )
        self._news_clients[engine_id] = client
        return client

    def _scholar(self) -> ScopusStyleClient:
        if self._scholar_client is None:
            if not self.config.scholar_key:
                raise EngineError("scholarly engine is not configured")
            self._scholar_client = ScopusStyleClient(
                self.config.scholar_key, self.config.user_agent,
                self.config.timeout, self.session,
            )
        return self._scholar_client

    def _require_store(self) -> FixtureStore:
        if self.store is None:
            raise FixtureMiss("no fixtures directory configured")
        return self.store

    # -- news tiers --

    def search_news_tier(self, engine_id: str, query: NewsQuery,
                         max_results: int | None = None) -> list[SearchHit]:
        """Run one tier; the general tier never emits denylisted sources."""
        if engine_id not in NEWS_ENGINES:
            raise EngineError(f"unknown news engine {engine_id!r}")
        limit = max_results if max_results is not None else self.config.max_per_tier

        if self.config.mode == MODE_REPLAY:
            raw = self._require_store().load(engine_id, query.rendered).get("hits", [])
        else:
            rendered = query.rendered
            if engine_id == ENGINE_GENERAL:
                rendered = f"{rendered} {_NEWSARTICLE_REFINEMENT}"
            raw = self._news_client(engine_id).search(rendered, limit)
            if self.config.mode == MODE_RECORD:
                self._require_store().save(engine_id, query.rendered, {
                    "query": query.rendered,
                    "engine_id": engine_id,
                    "retrieved_at": dt.datetime.now(dt.timezone.utc).isoformat(),
                    "hits": raw,
                })

        hits: list[SearchHit] = []
        for item in raw:
            url = item.get("url", "")
            if engine_id == ENGINE_GENERAL:
                try:
                    if self.registry.classify_source(url).kind == KIND_DENIED:
                        logger.info("dropping denylisted hit %s", url)
                        continue
                except MalformedUrl:
                    logger.warning("dropping malformed hit url %r", url)
                    continue
            hits.append(SearchHit(
                url=url,
                title=item.get("title", ""),
                snippet=item.get("snippet", ""),
                engine=engine_id,
                rank_in_engine=len(hits) + 1,
            ))
            if len(hits) >= limit:
                break
        return hits

    # -- scholarly --

    def search_publications(self, query: ScholarQuery,
                            max_results: int | None = None) -> list[PublicationRecord]:
        limit = max_results if max_results is not None else self.config.max_publications

        if self.config.mode == MODE_REPLAY:
            raw = self._require_store().load(ENGINE_SCHOLAR, query.rendered).get("records", [])
        else:
            raw = self._scholar().search(query.rendered, limit)
            if self.config.mode == MODE_RECORD:
                self._require_store().save(ENGINE_SCHOLAR, query.rendered, {
                    "query": query.rendered,
                    "engine_id": ENGINE_SCHOLAR,
                    "retrieved_at": dt.datetime.now(dt.timezone.utc).isoformat(),
                    "records": raw,
                })

        this_year = dt.date.today().year
        records: list[PublicationRecord] = []
        for item in raw[:limit]:
            authors = tuple(
                Author(author_id=str(a.get("author_id", "")), display_name=str(a.get("display_name", "")))
                for a in item.get("authors", [])
                if a.get("author_id")
            )
            if not authors:
                logger.warning("dropping publication without authors: %r", item.get("title"))
                continue
            year = int(item.get("year", 0))
            if not 1800 <= year <= this_year + 1:
                logger.warning("dropping publication with implausible year %s: %r",
                               year, item.get("title"))
                continue
            records.append(PublicationRecord(
                id=str(item.get("id", "")),
                title=str(item.get("title", "")),
                venue=str(item.get("venue", "")),
                year=year,
                abstract=str(item.get("abstract", "")),
                authors=authors,
                relevance_rank=len(records) + 1,
            ))
        return records

    # -- researcher profiles --

    def fetch_researcher_profile(self, author_id: str) -> dict:
        """Merged raw profile fields from the configured registries.

        Scalar fields take the first registry's value (config order); each
        registry contributes its profile link to `links` in the same order.
        An author unknown to every registry yields an empty map.
        """
        if self.config.mode == MODE_REPLAY:
            payload = self._require_store().load(PROFILE_STORE, author_id)
        else:
            payload = self._scholar().author_profile(author_id)
            if self.config.mode == MODE_RECORD:
                payload = {"author_id": author_id, **payload}
                self._require_store().save(PROFILE_STORE, author_id, payload)

        registries = payload.get("registries", {})
        merged: dict = {}
        links: list[str] = []
        for name in self.config.profile_registry_order:
            fields = registries.get(name)
            if not fields:
                continue
            for key in ("name", "affiliation", "email", "homepage", "subject_areas"):
                value = fields.get(key)
                if value and key not in merged:
                    merged[key] = value
            link = fields.get("profile_url")
            if link:
                links.append(link)
        if links:
            merged["links"] = links
        return merged
