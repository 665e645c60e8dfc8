"""Wire form of the evidence bundle, shared by the HTTP service and CLI.

One serializer keeps the two surfaces byte-compatible: same keys, same
order, same date formatting.
"""

from __future__ import annotations

import json

from .pipeline import EvidenceBundle


def bundle_to_dict(bundle: EvidenceBundle, warnings: list[str]) -> dict:
    return {
        "query_news": bundle.query_news,
        "query_scholar": bundle.query_scholar,
        "cards": [
            {
                "source_name": card.source_name,
                "source_tier": card.source_tier,
                "mbfc_url": card.mbfc_url,
                "published_at": card.published_at.isoformat() if card.published_at else None,
                "article_url": card.article_url,
                "opinion_paragraphs": list(card.opinion_paragraphs),
                "is_summary_card": card.is_summary_card,
            }
            for card in bundle.cards
        ],
        "publications": [
            {
                "title": pub.title,
                "venue": pub.venue,
                "year": pub.year,
                "abstract": pub.abstract,
            }
            for pub in bundle.publications
        ],
        "researchers": [
            {
                "name": r.display_name,
                "affiliation": r.affiliation or None,
                "links": list(r.registry_links),
                "count": r.publication_count_in_results,
            }
            for r in bundle.researchers
        ],
        "warnings": list(warnings),
    }


def bundle_to_json(bundle: EvidenceBundle, warnings: list[str]) -> str:
    return json.dumps(bundle_to_dict(bundle, warnings), indent=2, ensure_ascii=False)
