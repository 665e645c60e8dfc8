"""Deterministic rule-based part-of-speech tagging.

Rule order per token: punctuation/number shape, closed-class lexicon,
suffix rules, TitleCase-mid-sentence, default NOUN. Crude on purpose: the
tagger only needs to be good enough to carve noun phrases out of news
prose, and any tagger with the same signature can be plugged in instead.
"""

from __future__ import annotations

import re
from typing import Callable

NOUN = "NOUN"
PROPN = "PROPN"
ADJ = "ADJ"
VERB = "VERB"
DET = "DET"
ADP = "ADP"
NUM = "NUM"
PUNCT = "PUNCT"
OTHER = "OTHER"

Tagger = Callable[..., list[tuple[str, str]]]

_NUM_RE = re.compile(r"^\d+(?:[.,:\-]\d+)*$")
_WORD_START_RE = re.compile(r"[^\W_]")

_DETERMINERS = frozenset("""
the a an this that these those each every either neither some any no both
all half such what which whose another
""".split())

_ADPOSITIONS = frozenset("""
of in on at as by for with about against between into through during before
after above below to from up down under over off near since until among
amid via per within without across along around behind beside besides
beyond despite except inside outside toward towards upon onto like unlike
""".split())

# Common verbs, auxiliaries and reporting verbs. Ambiguous noun/verb words
# (study, report, claim, ...) are deliberately left out and default to NOUN.
_VERBS = frozenset("""
is are was were be been being am has have had having do does did done will
would can could shall should may might must said say says saying tell tells
told add adds added explain explains explained note notes noted warn warns
warned argue argues argued found find finds show shows showed shown suggest
suggests suggested announce announces announced make makes made take takes
took taken give gives gave given get gets got go goes went gone come comes
came see sees saw seen know knows knew known think thinks thought believe
believes believed work works worked help helps helped use uses used want
wants wanted call calls called include includes included provide provides
provided remain remains remained become becomes became seem seems seemed
appear appears appeared lead leads led allow allows allowed develop
develops developed conduct conducts conducted publish publishes published
release releases released meet meets met keep keeps kept put puts bring
brings brought write writes wrote written read reads run runs ran begin
begins began begun continue continues continued confirm confirms confirmed
describe describes described
""".split())

_OTHER_WORDS = frozenset("""
he she it they we you i him her them us me mine his hers ours yours theirs
my your its our their and or but nor so yet because although though while
whereas if unless whether when where how why who whom not now then here
there very too also just only even still more most less least well often
never always sometimes already again further however moreover meanwhile
instead rather quite almost nearly perhaps maybe really currently recently
previously later earlier soon together once twice ago yesterday today
tomorrow out many much few little own same other
""".split())

_NOUN_SUFFIXES = ("tion", "sion", "ment", "ity", "ness", "ism",
                  "ance", "ence", "ship", "hood")
_ADJ_SUFFIXES = ("ous", "ful", "ive", "able", "ible", "less")

_NOUN_PHRASE_TAGS = frozenset({NOUN, PROPN})


def _is_titlecase(token: str) -> bool:
    return len(token) >= 2 and token[0].isupper() and any(c.islower() for c in token[1:])


def _suffix_tag(token: str) -> str | None:
    lowered = token.lower()
    for suffix in _NOUN_SUFFIXES:
        if lowered.endswith(suffix) and len(lowered) > len(suffix) + 2:
            return NOUN
    for suffix in _ADJ_SUFFIXES:
        if lowered.endswith(suffix) and len(lowered) > len(suffix) + 2:
            return ADJ
    return None


def pos_tag(tokens: list[str], sentence_start: bool = True) -> list[tuple[str, str]]:
    """Tag tokens from one sentence (or any window of one).

    `sentence_start=False` marks the window as beginning mid-sentence, so a
    leading TitleCase token still counts as a proper noun.
    """
    tagged: list[tuple[str, str]] = []
    seen_word = not sentence_start
    for token in tokens:
        if not _WORD_START_RE.match(token or ""):
            tagged.append((token, PUNCT))
            continue
        tag = _tag_word(token, mid_sentence=seen_word)
        tagged.append((token, tag))
        seen_word = True
    return tagged


def _tag_word(token: str, mid_sentence: bool) -> str:
    if _NUM_RE.match(token):
        return NUM
    lowered = token.lower()
    if lowered in _DETERMINERS:
        return DET
    if lowered in _ADPOSITIONS:
        return ADP
    if lowered in _VERBS:
        return VERB
    if lowered in _OTHER_WORDS:
        return OTHER
    suffix = _suffix_tag(token)
    if suffix is not None:
        return suffix
    if mid_sentence and _is_titlecase(token):
        return PROPN
    return NOUN


def matches_noun_phrase(tags: list[str]) -> bool:
    """True when a tag sequence matches (ADJ)* (NOUN|PROPN)+."""
    i = 0
    while i < len(tags) and tags[i] == ADJ:
        i += 1
    if i == len(tags):
        return False
    while i < len(tags) and tags[i] in _NOUN_PHRASE_TAGS:
        i += 1
    return i == len(tags)
