from hypothesis import given
from hypothesis import strategies as st

from evidex.textproc import (
    content_words,
    is_titlecase,
    normalize_phrase,
    normalize_text,
    split_paragraphs,
    split_sentences,
    tokenize,
)


class TestSplitParagraphs:
    def test_double_newline_separates(self):
        assert split_paragraphs("A\n\nB\n\n\nC") == ["A", "B", "C"]

    def test_single_newline_is_not_a_separator(self):
        assert split_paragraphs("A\nB") == ["A\nB"]

    def test_empty_input(self):
        assert split_paragraphs("") == []

    def test_whitespace_only_pieces_dropped(self):
        assert split_paragraphs("A\n\n   \n\nB") == ["A", "B"]

    @given(st.lists(st.text(alphabet=st.characters(blacklist_characters="\n"), min_size=1)
                    .map(str.strip).filter(bool), max_size=8))
    def test_join_split_round_trip(self, paragraphs):
        joined = "\n\n".join(paragraphs)
        once = split_paragraphs(joined)
        assert once == split_paragraphs("\n\n".join(once))


class TestNormalizeText:
    def test_crlf_and_nbsp(self):
        assert normalize_text("a\r\nb\rc d") == "a\nb\nc d"

    def test_inline_whitespace_collapsed(self):
        assert normalize_text("a  \t b\n c   d") == "a b\nc d"

    def test_newline_runs_preserved(self):
        assert normalize_text("a\n\n\nb") == "a\n\n\nb"


class TestSentences:
    def test_basic_split(self):
        text = "First sentence here. Second one follows! Third asks? Yes."
        assert split_sentences(text) == [
            "First sentence here.", "Second one follows!", "Third asks?", "Yes.",
        ]

    def test_abbreviations_do_not_split(self):
        text = "Dr. Smith of St. Mary spoke. The talk was long."
        assert split_sentences(text) == ["Dr. Smith of St. Mary spoke.", "The talk was long."]

    def test_initials_do_not_split(self):
        text = "The U.S. agency and J. Doe agreed. Done."
        assert split_sentences(text) == ["The U.S. agency and J. Doe agreed.", "Done."]

    def test_sentences_are_substrings(self):
        text = "One thing happened. Another thing, too! A third?"
        for sentence in split_sentences(text):
            assert sentence in text

    def test_closing_quote_stays_with_sentence(self):
        text = "“It works now.” The team agreed."
        assert split_sentences(text) == ["“It works now.”", "The team agreed."]


class TestTokenize:
    def test_words_and_punct(self):
        assert tokenize('He said, "go!"') == ["He", "said", ",", '"', "go", "!", '"']

    def test_internal_apostrophe_and_hyphen(self):
        assert tokenize("the vaccine's peer-reviewed basis") == [
            "the", "vaccine's", "peer-reviewed", "basis",
        ]

    def test_trailing_apostrophe_split(self):
        assert tokenize("students' papers") == ["students", "'", "papers"]


class TestHelpers:
    def test_titlecase(self):
        assert is_titlecase("Oxford")
        assert is_titlecase("Mei-Ling")
        assert not is_titlecase("NASA")
        assert not is_titlecase("lower")
        assert not is_titlecase("J")

    def test_normalize_phrase(self):
        assert normalize_phrase("  Covid   Vaccine ") == "covid vaccine"

    def test_content_words_drop_stopwords(self):
        tokens = tokenize("The vaccine is a success")
        assert content_words(tokens) == ["vaccine", "success"]
