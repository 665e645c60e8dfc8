"""Plain-text plumbing: normalization, paragraph/sentence splitting, tokens.

Every routine here is pure and deterministic; the rest of the pipeline
(keyword scoring, opinion selection, summaries) builds on these exact rules,
so changing them changes golden test values downstream.
"""

from __future__ import annotations

import re

# Words keep internal apostrophes and hyphens ("vaccine's", "peer-reviewed");
# everything else that is not whitespace becomes a single punctuation token.
# Word characters are unicode letters and digits ([^\W_]), so accented names
# stay whole.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’\-][^\W_]+)*|[^\w\s]|_")

_PARAGRAPH_SPLIT_RE = re.compile(r"\n{2,}")
_INLINE_WS_RE = re.compile(r"[ \t\f\v]+")

# Tokens that end in '.' without ending a sentence.
_ABBREVIATIONS = frozenset({
    "dr", "prof", "mr", "mrs", "ms", "st", "jr", "sr", "vs", "etc",
    "e.g", "i.e", "fig", "no", "al", "ed", "inc", "ltd", "dept",
})

_SENTENCE_END_RE = re.compile(r"[.!?]+[\"'”’»)\]]*\s+")


def normalize_text(text: str) -> str:
    """Normalize raw article text before any splitting.

    CRLF and CR become LF, NBSP becomes a plain space, and runs of
    spaces/tabs inside a line collapse to one space. Newlines are preserved
    so the two-newline paragraph rule still applies afterwards.
    """
    text = text.replace("\r\n", "\n").replace("\r", "\n")
    text = text.replace(" ", " ")
    lines = [_INLINE_WS_RE.sub(" ", line).strip() for line in text.split("\n")]
    return "\n".join(lines)


def split_paragraphs(body_text: str) -> list[str]:
    """Split text into paragraphs on runs of two or more newlines.

    Pieces are trimmed and empty pieces dropped, so the result round-trips:
    joining with "\\n\\n" and splitting again yields the same list.
    """
    pieces = (p.strip() for p in _PARAGRAPH_SPLIT_RE.split(body_text))
    return [p for p in pieces if p]


def split_sentences(text: str) -> list[str]:
    """Split a paragraph (or whole body) into sentences.

    Rule: a sentence ends at a run of .!? (plus trailing closing quotes or
    brackets) followed by whitespace, unless the word just before the period
    is a known abbreviation or a single letter (initials, "U.S."-style
    acronym parts). Every returned sentence is a verbatim substring of the
    input.
    """
    sentences: list[str] = []
    start = 0
    for match in _SENTENCE_END_RE.finditer(text):
        boundary = match.end()
        before = text[start:match.start()]
        last_word = _last_word(before)
        if last_word is not None:
            bare = last_word.lower().rstrip(".")
            if bare in _ABBREVIATIONS or len(bare) == 1:
                continue
        piece = text[start:boundary].strip()
        if piece:
            sentences.append(piece)
        start = boundary
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _last_word(text: str) -> str | None:
    tokens = _TOKEN_RE.findall(text)
    for token in reversed(tokens):
        if is_word(token):
            return token
    return None


def tokenize(text: str) -> list[str]:
    """Whitespace + punctuation tokenization.

    Returns word tokens (letters/digits with internal apostrophes or
    hyphens) and single-character punctuation tokens, in order.
    """
    return _TOKEN_RE.findall(text)


_WORD_START_RE = re.compile(r"[^\W_]")


def is_word(token: str) -> bool:
    return bool(token) and _WORD_START_RE.match(token) is not None


def is_titlecase(token: str) -> bool:
    """True for Word-shaped tokens: leading uppercase, some lowercase after.

    All-caps tokens (acronyms) and bare initials do not count.
    """
    return len(token) >= 2 and token[0].isupper() and any(c.islower() for c in token[1:])


def normalize_phrase(phrase: str) -> str:
    """Lowercase and single-space a phrase for identity comparisons."""
    return " ".join(phrase.lower().split())


# Standard English stopword list; content words for the summary scorer are
# everything outside this set.
STOPWORDS = frozenset("""
a about above after again against all am an and any are aren't as at be
because been before being below between both but by can cannot could
couldn't did didn't do does doesn't doing don't down during each few for
from further had hadn't has hasn't have haven't having he he'd he'll he's
her here here's hers herself him himself his how how's i i'd i'll i'm i've
if in into is isn't it it's its itself let's me more most mustn't my myself
no nor not of off on once only or other ought our ours ourselves out over
own same shan't she she'd she'll she's should shouldn't so some such than
that that's the their theirs them themselves then there there's these they
they'd they'll they're they've this those through to too under until up
very was wasn't we we'd we'll we're we've were weren't what what's when
when's where where's which while who who's whom why why's with won't would
wouldn't you you'd you'll you're you've your yours yourself yourselves
""".split())


def content_words(tokens: list[str]) -> list[str]:
    """Lowercased word tokens that are not stopwords."""
    return [t.lower() for t in tokens if is_word(t) and t.lower() not in STOPWORDS]
