from evidex.postag import (
    ADJ,
    ADP,
    DET,
    NOUN,
    NUM,
    OTHER,
    PROPN,
    PUNCT,
    VERB,
    matches_noun_phrase,
    pos_tag,
)
from evidex.textproc import tokenize


class TestLexiconAndDefaults:
    def test_determiner_and_default_noun(self):
        assert pos_tag(["the", "vaccine"]) == [("the", DET), ("vaccine", NOUN)]

    def test_titlecase_mid_sentence_is_propn(self):
        assert pos_tag(["Pfizer"], sentence_start=False) == [("Pfizer", PROPN)]

    def test_titlecase_at_sentence_start_defaults_to_noun(self):
        assert pos_tag(["Pfizer", "responded"]) == [("Pfizer", NOUN), ("responded", NOUN)]

    def test_number_and_punctuation(self):
        assert pos_tag(["42", ",", "3.5"]) == [("42", NUM), (",", PUNCT), ("3.5", NUM)]

    def test_suffix_rules(self):
        tags = dict(pos_tag(["information", "statement", "clarity", "famous", "hopeful", "active"]))
        assert tags["information"] == NOUN
        assert tags["statement"] == NOUN
        assert tags["clarity"] == NOUN
        assert tags["famous"] == ADJ
        assert tags["hopeful"] == ADJ
        assert tags["active"] == ADJ

    def test_suffix_beats_titlecase(self):
        # a TitleCase token with a known suffix is not a proper noun
        assert pos_tag(["the", "University"]) == [("the", DET), ("University", NOUN)]

    def test_all_caps_is_not_titlecase(self):
        # lexicon lookup is case-insensitive, so WHO hits the pronoun entry;
        # a non-lexicon acronym falls through to the NOUN default, not PROPN
        assert pos_tag(["the", "WHO"]) == [("the", DET), ("WHO", OTHER)]
        assert pos_tag(["the", "NASA"]) == [("the", DET), ("NASA", NOUN)]


GOLDEN_SENTENCE = (
    "The research team at Oxford University published its findings on "
    "Tuesday, saying the new vaccine showed strong protection against "
    "severe illness in every group studied during the long trial period, "
    "a result that independent experts described as hopeful but "
    "preliminary evidence for 2024 decisions this coming winter."
)

# hand-applied rule sequence: lexicon, suffix, TitleCase-mid-sentence, default
GOLDEN_TAGS = [
    ("The", DET), ("research", NOUN), ("team", NOUN), ("at", ADP),
    ("Oxford", PROPN), ("University", NOUN), ("published", VERB),
    ("its", OTHER), ("findings", NOUN), ("on", ADP), ("Tuesday", PROPN),
    (",", PUNCT), ("saying", VERB), ("the", DET), ("new", NOUN),
    ("vaccine", NOUN), ("showed", VERB), ("strong", NOUN),
    ("protection", NOUN), ("against", ADP), ("severe", NOUN),
    ("illness", NOUN), ("in", ADP), ("every", DET), ("group", NOUN),
    ("studied", NOUN), ("during", ADP), ("the", DET), ("long", NOUN),
    ("trial", NOUN), ("period", NOUN), (",", PUNCT), ("a", DET),
    ("result", NOUN), ("that", DET), ("independent", NOUN),
    ("experts", NOUN), ("described", VERB), ("as", ADP),
    ("hopeful", ADJ), ("but", OTHER), ("preliminary", NOUN),
    ("evidence", NOUN), ("for", ADP), ("2024", NUM), ("decisions", NOUN),
    ("this", DET), ("coming", NOUN), ("winter", NOUN), (".", PUNCT),
]


class TestGoldenSentence:
    def test_fifty_tokens(self):
        assert len(tokenize(GOLDEN_SENTENCE)) == 50

    def test_golden_tag_sequence(self):
        assert pos_tag(tokenize(GOLDEN_SENTENCE)) == GOLDEN_TAGS


class TestNounPhrasePattern:
    def test_accepts(self):
        assert matches_noun_phrase([NOUN])
        assert matches_noun_phrase([ADJ, NOUN])
        assert matches_noun_phrase([ADJ, ADJ, PROPN, NOUN])

    def test_rejects(self):
        assert not matches_noun_phrase([])
        assert not matches_noun_phrase([ADJ])
        assert not matches_noun_phrase([NOUN, ADJ, NOUN])
        assert not matches_noun_phrase([VERB, NOUN])
        assert not matches_noun_phrase([NOUN, VERB])
