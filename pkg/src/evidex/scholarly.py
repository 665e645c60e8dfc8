"""Publication ordering and researcher ranking.

Publications keep the provider's relevance order with publication year as
the tiebreak. Researchers are the distinct co-authors across all retrieved
publications, ordered by how many of those publications they appear on and
then by how complete (contactable) their profile is.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gateway import PublicationRecord

COMPLETENESS_FIELDS = 7  # name, affiliation, two registry links, subjects, email, homepage


@dataclass(frozen=True)
class ResearcherProfile:
    author_id: str
    display_name: str
    affiliation: str = ""
    registry_links: list[str] = field(default_factory=list)
    subject_areas: list[str] = field(default_factory=list)
    email: str = ""
    homepage: str = ""
    publication_count_in_results: int = 1
    completeness: int = 0


def profile_completeness(display_name: str, affiliation: str, registry_links: list[str],
                         subject_areas: list[str], email: str, homepage: str) -> int:
    """0-7 count of filled profile slots; two slots are the registry links."""
    slots = [
        bool(display_name),
        bool(affiliation),
        len(registry_links) >= 1,
        len(registry_links) >= 2,
        bool(subject_areas),
        bool(email),
        bool(homepage),
    ]
    return sum(slots)


def order_publications(records: list[PublicationRecord]) -> list[PublicationRecord]:
    """Relevance order, newer year first among equal relevance."""
    return sorted(records, key=lambda r: (r.relevance_rank, -r.year, r.id))


def rank_researchers(
    records: list[PublicationRecord],
    profiles: dict[str, dict],
) -> list[ResearcherProfile]:
    """One ranked ResearcherProfile per distinct author across the records.

    Sort key: publication count in these results (desc), profile
    completeness (desc), display name (asc).
    """
    counts: dict[str, int] = {}
    fallback_names: dict[str, str] = {}
    for record in records:
        for author in record.authors:
            counts[author.author_id] = counts.get(author.author_id, 0) + 1
            fallback_names.setdefault(author.author_id, author.display_name)

    researchers: list[ResearcherProfile] = []
    for author_id, count in counts.items():
        raw = profiles.get(author_id) or {}
        display_name = raw.get("name") or fallback_names.get(author_id, "")
        affiliation = raw.get("affiliation") or ""
        links = list(raw.get("links") or [])
        subjects = list(raw.get("subject_areas") or [])
        email = raw.get("email") or ""
        homepage = raw.get("homepage") or ""
        researchers.append(ResearcherProfile(
            author_id=author_id,
            display_name=display_name,
            affiliation=affiliation,
            registry_links=links,
            subject_areas=subjects,
            email=email,
            homepage=homepage,
            publication_count_in_results=count,
            completeness=profile_completeness(
                display_name, affiliation, links, subjects, email, homepage
            ),
        ))

    researchers.sort(
        key=lambda r: (-r.publication_count_in_results, -r.completeness, r.display_name)
    )
    return researchers
