"""End-to-end orchestration: article in, evidence bundle out.

The pipeline wires ingest, keyword extraction, the search gateway, the
opinion selector and the scholarly ranking together. Per-hit article
processing and the four searches run on a small thread pool; results are
collected in deterministic order so replay runs are bit-exact.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .config import EvidexConfig
from .errors import EngineError, EvidexError, FixtureMiss
from .gateway import (
    ENGINE_GENERAL,
    ENGINE_MAINSTREAM,
    ENGINE_SCIENTIFIC,
    PublicationRecord,
    SearchGateway,
    SearchHit,
    aggregate_hits,
    build_news_query,
    build_scholar_query,
)
from .ingest import ArticleDocument, PageFetcher, extract_article
from .keywords import Gazetteer, KeywordCandidate, KeywordSelection, extract_candidates
from .opinions import (
    EntityLexicons,
    EvidenceCard,
    build_evidence_card,
    default_lexicons,
    select_opinion_paragraphs,
)
from .registry import SourceRegistry
from .scholarly import ResearcherProfile, order_publications, rank_researchers

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EvidenceBundle:
    cards: list[EvidenceCard]
    publications: list[PublicationRecord]
    researchers: list[ResearcherProfile]
    query_news: str
    query_scholar: str


@dataclass
class BundleResult:
    bundle: EvidenceBundle
    warnings: list[str] = field(default_factory=list)


class EvidencePipeline:
    """Shared engine behind the HTTP service and the CLI."""

    def __init__(
        self,
        config: EvidexConfig,
        registry: SourceRegistry | None = None,
        lexicons: EntityLexicons | None = None,
        gazetteer: Gazetteer | None = None,
    ):
        self.config = config
        self.registry = registry or SourceRegistry.load(
            config.mainstream_registry_path,
            config.scientific_registry_path,
            config.denylist_path,
        )
        if lexicons is not None:
            self.lexicons = lexicons
        elif config.lexicons_path:
            self.lexicons = EntityLexicons.from_file(config.lexicons_path)
        else:
            self.lexicons = default_lexicons()
        if gazetteer is not None:
            self.gazetteer = gazetteer
        elif config.gazetteer_path:
            self.gazetteer = Gazetteer.from_file(config.gazetteer_path)
        else:
            self.gazetteer = Gazetteer.empty()
        self.fetcher = PageFetcher(config)
        self.gateway = SearchGateway(config, self.registry)

    # -- stage 1: article + candidates --

    def ingest(self, url: str) -> ArticleDocument:
        result = self.fetcher.fetch(url)
        return extract_article(result.content, result.final_url,
                               min_chars=self.config.min_article_chars)

    def candidates(self, doc: ArticleDocument) -> list[KeywordCandidate]:
        return extract_candidates(doc, self.gazetteer)

    # -- stage 2: evidence bundle --

    def build_bundle(self, selection: KeywordSelection) -> BundleResult:
        warnings: list[str] = []
        news_query = build_news_query(selection)
        scholar_query = build_scholar_query(selection)

        with ThreadPoolExecutor(max_workers=4) as pool:
            futures = {
                engine: pool.submit(self.gateway.search_news_tier, engine, news_query)
                for engine in (ENGINE_MAINSTREAM, ENGINE_SCIENTIFIC, ENGINE_GENERAL)
            }
            pub_future = pool.submit(self.gateway.search_publications, scholar_query)

            tier_hits: dict[str, list[SearchHit]] = {}
            for engine in (ENGINE_MAINSTREAM, ENGINE_SCIENTIFIC, ENGINE_GENERAL):
                try:
                    tier_hits[engine] = futures[engine].result()
                except (EngineError, FixtureMiss) as exc:
                    warnings.append(f"{engine} search failed: {exc}")
                    tier_hits[engine] = []
            try:
                records = pub_future.result()
            except (EngineError, FixtureMiss) as exc:
                warnings.append(f"scholarly search failed: {exc}")
                records = []

        hits = aggregate_hits(
            tier_hits[ENGINE_MAINSTREAM],
            tier_hits[ENGINE_SCIENTIFIC],
            tier_hits[ENGINE_GENERAL],
        )

        cards: list[EvidenceCard] = []
        with ThreadPoolExecutor(max_workers=self.config.max_concurrent_requests) as pool:
            for hit, outcome in zip(hits, pool.map(self._process_hit, hits)):
                card, warning = outcome
                if warning:
                    warnings.append(warning)
                if card is not None:
                    cards.append(card)

        publications = order_publications(records)
        researchers = self._researchers(publications, warnings)

        bundle = EvidenceBundle(
            cards=cards,
            publications=publications,
            researchers=researchers,
            query_news=news_query.rendered,
            query_scholar=scholar_query.rendered,
        )
        return BundleResult(bundle=bundle, warnings=warnings)

    def _process_hit(self, hit: SearchHit) -> tuple[EvidenceCard | None, str | None]:
        """Fetch, extract and select for one hit; failures become warnings."""
        try:
            fetched = self.fetcher.fetch(hit.url)
            doc = extract_article(fetched.content, fetched.final_url,
                                  min_chars=self.config.min_article_chars)
        except EvidexError as exc:
            return None, f"skipped {hit.url}: {exc}"
        selection = select_opinion_paragraphs(doc, self.lexicons)
        card = build_evidence_card(
            hit, doc, selection, self.registry,
            summary_outlets=self.config.summary_outlet_domains,
            summary_k=self.config.summary_sentences,
        )
        return card, None

    def _researchers(self, publications: list[PublicationRecord],
                     warnings: list[str]) -> list[ResearcherProfile]:
        author_ids: list[str] = []
        for record in publications:
            for author in record.authors:
                if author.author_id not in author_ids:
                    author_ids.append(author.author_id)
        profiles: dict[str, dict] = {}
        for author_id in author_ids:
            try:
                profiles[author_id] = self.gateway.fetch_researcher_profile(author_id)
            except (EngineError, FixtureMiss) as exc:
                warnings.append(f"profile lookup failed for {author_id}: {exc}")
                profiles[author_id] = {}
        return rank_researchers(publications, profiles)
