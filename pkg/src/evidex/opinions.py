"""Expert-opinion paragraph selection and evidence card assembly.

A paragraph counts as an expert opinion only when three independent signals
all fire: a person name, an academic-organization mention, and a quotation
pair long enough to be reported speech. The detectors are rule-based and
pluggable; anything honoring the same signatures (for example a model-backed
NER) can replace them.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from urllib.parse import urlsplit

from .config import DATA_DIR, EvidexConfig
from .gateway import SearchHit
from .ingest import ArticleDocument, extractive_summary
from .registry import KIND_DENIED, KIND_GENERAL, SourceRegistry
from .textproc import is_titlecase, tokenize

MIN_QUOTED_SPAN = 15          # characters between the marks
NAME_SPAN_LENGTHS = (2, 3, 4)  # TitleCase tokens forming a person name
EVIDENCE_WINDOW = 3           # tokens around a span/indicator to scan

LEXICONS_PATH = DATA_DIR / "lexicons.json"


@dataclass(frozen=True)
class EntityLexicons:
    honorifics: frozenset[str]
    speech_verbs: frozenset[str]
    org_indicators: frozenset[str]
    quote_pairs: tuple[tuple[str, str], ...]

    def __post_init__(self):
        for collection in (self.honorifics, self.speech_verbs, self.org_indicators):
            bad = [e for e in collection if e != e.lower()]
            if bad:
                raise ValueError(f"lexicon entries must be lowercase: {bad}")
        for open_mark, close_mark in self.quote_pairs:
            if not open_mark or not close_mark:
                raise ValueError("quote pairs must have non-empty marks")

    @classmethod
    def from_file(cls, path: str | Path) -> "EntityLexicons":
        raw = json.loads(Path(path).read_text("utf-8"))
        return cls(
            honorifics=frozenset(raw["honorifics"]),
            speech_verbs=frozenset(raw["speech_verbs"]),
            org_indicators=frozenset(raw["org_indicators"]),
            quote_pairs=tuple((o, c) for o, c in raw["quote_pairs"]),
        )

    def indicator_words(self) -> frozenset[str]:
        return frozenset(w for ind in self.org_indicators for w in ind.split())


@lru_cache(maxsize=1)
def default_lexicons() -> EntityLexicons:
    return EntityLexicons.from_file(LEXICONS_PATH)


def _is_honorific(token: str, lex: EntityLexicons) -> bool:
    lowered = token.lower()
    return lowered in lex.honorifics or lowered + "." in lex.honorifics


def _honorific_before(tokens: list[str], start: int, lex: EntityLexicons) -> bool:
    """Honorific immediately before position `start`, tolerating its period.

    "Dr. Jane" tokenizes to [Dr, ., Jane]; the dot between honorific and
    name still counts as "immediately preceding".
    """
    if start > 0 and _is_honorific(tokens[start - 1], lex):
        return True
    return start > 1 and tokens[start - 1] == "." and _is_honorific(tokens[start - 2], lex)


def contains_person_name(paragraph: str, lex: EntityLexicons) -> bool:
    """Person-name heuristic: 2-4 TitleCase tokens with corroboration.

    The span tokens must not be org-indicator words; corroboration is an
    immediately preceding honorific or a speech verb within three tokens of
    either end of the span.
    """
    tokens = tokenize(paragraph)
    indicator_words = lex.indicator_words()
    eligible = [
        is_titlecase(t) and t.lower() not in indicator_words
        for t in tokens
    ]
    n = len(tokens)
    for start in range(n):
        if not eligible[start]:
            continue
        for length in NAME_SPAN_LENGTHS:
            end = start + length
            if end > n:
                break
            if not all(eligible[start:end]):
                break
            if _honorific_before(tokens, start, lex):
                return True
            before = tokens[max(0, start - EVIDENCE_WINDOW):start]
            after = tokens[end:end + EVIDENCE_WINDOW]
            if any(t.lower() in lex.speech_verbs for t in before + after):
                return True
    return False


def contains_academic_org(paragraph: str, lex: EntityLexicons) -> bool:
    """Org indicator (university, institute, ...) near a TitleCase token."""
    tokens = tokenize(paragraph)
    lowered = [t.lower() for t in tokens]
    n = len(tokens)
    for indicator in lex.org_indicators:
        words = indicator.split()
        width = len(words)
        for start in range(n - width + 1):
            if lowered[start:start + width] != words:
                continue
            before = tokens[max(0, start - EVIDENCE_WINDOW):start]
            after = tokens[start + width:start + width + EVIDENCE_WINDOW]
            if any(is_titlecase(t) for t in before + after):
                return True
    return False


def contains_quote_pair(paragraph: str, lex: EntityLexicons) -> bool:
    """A quotation pair enclosing at least MIN_QUOTED_SPAN characters.

    Straight single quotes only open after start-of-text/whitespace and only
    close before end/whitespace/punctuation, which keeps apostrophes from
    counting as quotation marks.
    """
    for open_mark, close_mark in lex.quote_pairs:
        if _has_enclosed_span(paragraph, open_mark, close_mark):
            return True
    return False


def _has_enclosed_span(text: str, open_mark: str, close_mark: str) -> bool:
    guarded = open_mark == "'" and close_mark == "'"
    i = 0
    n = len(text)
    while i < n:
        open_at = text.find(open_mark, i)
        if open_at < 0:
            return False
        if guarded and not _can_open(text, open_at):
            i = open_at + 1
            continue
        search_from = open_at + len(open_mark)
        while True:
            close_at = text.find(close_mark, search_from)
            if close_at < 0:
                return False
            if guarded and not _can_close(text, close_at):
                search_from = close_at + 1
                continue
            break
        if close_at - (open_at + len(open_mark)) >= MIN_QUOTED_SPAN:
            return True
        i = close_at + len(close_mark)
    return False


def _can_open(text: str, at: int) -> bool:
    return at == 0 or text[at - 1].isspace()


def _can_close(text: str, at: int) -> bool:
    after = at + 1
    if after >= len(text):
        return True
    ch = text[after]
    return ch.isspace() or not ch.isalnum()


def select_opinion_paragraphs(doc: ArticleDocument,
                              lex: EntityLexicons | None = None) -> list[str]:
    """Paragraphs where all three expert-opinion signals fire, in order."""
    lex = lex or default_lexicons()
    return [
        p for p in doc.paragraphs
        if contains_person_name(p, lex)
        and contains_academic_org(p, lex)
        and contains_quote_pair(p, lex)
    ]


@dataclass(frozen=True)
class EvidenceCard:
    """One source's expert-opinion extract with provenance and credibility link."""

    source_name: str
    source_tier: str                 # Mainstream | Scientific | General
    mbfc_url: str | None
    published_at: dt.date | None
    article_url: str
    opinion_paragraphs: list[str]
    is_summary_card: bool = False

    def __post_init__(self):
        if not self.opinion_paragraphs and not self.is_summary_card:
            raise ValueError("non-summary cards need at least one paragraph")


def _host(url: str) -> str:
    host = (urlsplit(url).hostname or "").lower()
    return host[4:] if host.startswith("www.") else host


def is_summary_outlet(url: str, outlets: tuple[str, ...]) -> bool:
    host = _host(url)
    return any(host == o or host.endswith("." + o) for o in outlets)


def build_evidence_card(
    hit: SearchHit,
    doc: ArticleDocument,
    selection: list[str],
    registry: SourceRegistry,
    summary_outlets: tuple[str, ...] = EvidexConfig.summary_outlet_domains,
    summary_k: int = 5,
) -> EvidenceCard | None:
    """Assemble the card for one search hit, or None when it contributes nothing.

    Articles from a researcher-authored outlet (The Conversation) carry an
    extractive summary instead of selected paragraphs, since the whole text
    is already expert-written.
    """
    klass = registry.classify_source(hit.url)
    if klass.kind == KIND_DENIED:
        return None
    if klass.entry is not None:
        source_name = klass.entry.display_name
        mbfc_url = klass.entry.mbfc_url
        tier = klass.entry.tier
    else:
        source_name = _host(hit.url)
        mbfc_url = None
        tier = KIND_GENERAL

    if is_summary_outlet(hit.url, summary_outlets):
        summary = extractive_summary(doc, k=summary_k)
        return EvidenceCard(
            source_name=source_name,
            source_tier=tier,
            mbfc_url=mbfc_url,
            published_at=doc.published_at,
            article_url=doc.url,
            opinion_paragraphs=list(summary.sentences),
            is_summary_card=True,
        )
    if not selection:
        return None
    return EvidenceCard(
        source_name=source_name,
        source_tier=tier,
        mbfc_url=mbfc_url,
        published_at=doc.published_at,
        article_url=doc.url,
        opinion_paragraphs=list(selection),
        is_summary_card=False,
    )
