"""evidex: an evidence engine for semi-automated fact-checking.

Given a news article URL the pipeline extracts candidate topic keywords,
lets a human confirm them, and assembles three evidence bundles: expert
opinion paragraphs from credibility-vetted news sources, peer-reviewed
publications, and a ranked list of researchers behind them.
"""

from .agreement import RatingMatrix, drop_na_items, fleiss_kappa, mean_rating
from .config import EvidexConfig
from .errors import EvidexError
from .gateway import (
    NewsQuery,
    PublicationRecord,
    ScholarQuery,
    SearchGateway,
    SearchHit,
    aggregate_hits,
    build_news_query,
    build_scholar_query,
)
from .ingest import ArticleDocument, Summary, extract_article, extractive_summary, fetch_html
from .keywords import (
    Gazetteer,
    KeywordCandidate,
    KeywordSelection,
    apply_selection,
    extract_candidates,
)
from .opinions import (
    EntityLexicons,
    EvidenceCard,
    build_evidence_card,
    contains_academic_org,
    contains_person_name,
    contains_quote_pair,
    select_opinion_paragraphs,
)
from .pipeline import EvidenceBundle, EvidencePipeline
from .registry import Denylist, SourceEntry, SourceRegistry
from .scholarly import ResearcherProfile, order_publications, rank_researchers
from .textproc import split_paragraphs

__version__ = "0.1.0"

__all__ = [
    "ArticleDocument",
    "Denylist",
    "EntityLexicons",
    "EvidenceBundle",
    "EvidenceCard",
    "EvidexConfig",
    "EvidexError",
    "EvidencePipeline",
    "Gazetteer",
    "KeywordCandidate",
    "KeywordSelection",
    "NewsQuery",
    "PublicationRecord",
    "RatingMatrix",
    "ResearcherProfile",
    "ScholarQuery",
    "SearchGateway",
    "SearchHit",
    "SourceEntry",
    "SourceRegistry",
    "Summary",
    "aggregate_hits",
    "apply_selection",
    "build_evidence_card",
    "build_news_query",
    "build_scholar_query",
    "contains_academic_org",
    "contains_person_name",
    "contains_quote_pair",
    "drop_na_items",
    "extract_article",
    "extract_candidates",
    "extractive_summary",
    "fetch_html",
    "fleiss_kappa",
    "mean_rating",
    "order_publications",
    "rank_researchers",
    "select_opinion_paragraphs",
    "split_paragraphs",
]
