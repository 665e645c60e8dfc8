"""Candidate keyword extraction and the human selection step.

Candidates are maximal noun-phrase spans scored by a closed-form statistic
(term frequency, phrase length, earliness of first mention) with a
multiplicative boost for phrases found in a gazetteer of known topics.
The top ten go to the user, who picks the relevant ones and may add their
own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from . import postag
from .errors import EmptySelection, NoCandidates, UnknownCandidate
from .ingest import ArticleDocument
from .postag import Tagger, pos_tag
from .textproc import normalize_phrase, tokenize

GAZETTEER_BOOST = 2.0
MAX_CANDIDATES = 10


@dataclass(frozen=True)
class Gazetteer:
    """Exact-membership set of known phrases (thesaurus/encyclopedia titles)."""

    entries: frozenset[str]
    source_label: str = ""

    def __contains__(self, phrase: str) -> bool:
        return normalize_phrase(phrase) in self.entries

    @classmethod
    def empty(cls) -> "Gazetteer":
        return cls(entries=frozenset(), source_label="empty")

    @classmethod
    def from_file(cls, path: str | Path) -> "Gazetteer":
        """One normalized phrase per line, UTF-8; blank lines and # comments skipped."""
        path = Path(path)
        entries = set()
        for line in path.read_text("utf-8").splitlines():
            line = line.strip()
            if line and not line.startswith("#"):
                entries.add(normalize_phrase(line))
        return cls(entries=frozenset(entries), source_label=path.name)


@dataclass(frozen=True)
class KeywordCandidate:
    phrase: str          # normalized: lowercased, single-spaced
    display: str         # original casing of the first occurrence
    base_score: float
    boosted: bool
    rank: int
    final_score: float


@dataclass(frozen=True)
class KeywordSelection:
    selected: list[str]  # candidate phrases, in candidate-rank order
    custom: list[str]    # user-entered phrases, in entry order

    def phrases(self) -> list[str]:
        return list(self.selected) + list(self.custom)


@dataclass
class _SpanStats:
    display: str
    wordcount: int
    tf: int
    first_sentence: int
    first_position: int


def _spans_in_sentence(tags: list[str]) -> list[tuple[int, int]]:
    """Maximal (start, end) spans matching (ADJ)*(NOUN|PROPN)+.

    A maximal noun run plus the adjective run immediately before it; any
    extension left or right breaks the pattern.
    """
    spans: list[tuple[int, int]] = []
    n = len(tags)
    i = 0
    while i < n:
        if tags[i] in (postag.NOUN, postag.PROPN):
            end = i
            while end < n and tags[end] in (postag.NOUN, postag.PROPN):
                end += 1
            start = i
            while start > 0 and tags[start - 1] == postag.ADJ:
                start -= 1
            spans.append((start, end))
            i = end
        else:
            i += 1
    return spans


def extract_candidates(
    doc: ArticleDocument,
    gazetteer: Gazetteer,
    tagger: Tagger = pos_tag,
    limit: int = MAX_CANDIDATES,
    boost: float = GAZETTEER_BOOST,
) -> list[KeywordCandidate]:
    """Rank candidate keywords for an article.

    base_score = tf * (1 + log2(1 + wordcount)) * (1 + 1/(1 + first_sentence));
    gazetteer membership multiplies by `boost`. Ties break by earlier first
    occurrence, then lexicographically.
    """
    stats: dict[str, _SpanStats] = {}
    position = 0
    for s_index, sentence in enumerate(doc.sentences()):
        tokens = tokenize(sentence)
        tags = [tag for _, tag in tagger(tokens)]
        for start, end in _spans_in_sentence(tags):
            span_tokens = tokens[start:end]
            display = " ".join(span_tokens)
            phrase = normalize_phrase(display)
            entry = stats.get(phrase)
            if entry is None:
                stats[phrase] = _SpanStats(
                    display=display,
                    wordcount=len(span_tokens),
                    tf=1,
                    first_sentence=s_index,
                    first_position=position + start,
                )
            else:
                entry.tf += 1
        position += len(tokens)

    if not stats:
        raise NoCandidates("no noun-phrase span found in article body")

    scored: list[tuple[float, int, str, str, float, bool]] = []
    for phrase, s in stats.items():
        base = s.tf * (1 + math.log2(1 + s.wordcount)) * (1 + 1 / (1 + s.first_sentence))
        boosted = phrase in gazetteer
        final = base * boost if boosted else base
        scored.append((final, s.first_position, phrase, s.display, base, boosted))

    scored.sort(key=lambda item: (-item[0], item[1], item[2]))
    return [
        KeywordCandidate(
            phrase=phrase,
            display=display,
            base_score=base,
            boosted=boosted,
            rank=rank,
            final_score=final,
        )
        for rank, (final, _, phrase, display, base, boosted) in enumerate(scored[:limit], start=1)
    ]


def apply_selection(
    candidates: list[KeywordCandidate],
    chosen: list[str],
    custom: list[str],
) -> KeywordSelection:
    """Validate the user's picks and fold custom entries in.

    Custom phrases are normalized; a custom phrase equal to an offered
    candidate is treated as selecting that candidate instead.
    """
    by_phrase = {c.phrase: c for c in candidates}
    selected_set: set[str] = set()
    for raw in chosen:
        phrase = normalize_phrase(raw)
        if phrase not in by_phrase:
            raise UnknownCandidate(f"not an offered candidate: {raw!r}")
        selected_set.add(phrase)

    custom_out: list[str] = []
    for raw in custom:
        phrase = normalize_phrase(raw)
        if not phrase:
            continue
        if phrase in by_phrase:
            selected_set.add(phrase)
        elif phrase not in custom_out:
            custom_out.append(phrase)

    selected = [c.phrase for c in sorted(candidates, key=lambda c: c.rank)
                if c.phrase in selected_set]
    if not selected and not custom_out:
        raise EmptySelection("select at least one keyword")
    return KeywordSelection(selected=selected, custom=custom_out)


def candidates_to_json(candidates: list[KeywordCandidate]) -> list[dict]:
    """Wire form used by the session API and the CLI."""
    return [
        {
            "phrase": c.phrase,
            "display": c.display,
            "boosted": c.boosted,
            "rank": c.rank,
            "score": c.final_score,
        }
        for c in candidates
    ]
