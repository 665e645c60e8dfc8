import random

import pytest

from evidex.errors import EmptySelection, NoCandidates, UnknownCandidate
from evidex.keywords import Gazetteer, apply_selection, extract_candidates
from evidex.postag import matches_noun_phrase, pos_tag
from evidex.textproc import tokenize

from conftest import make_doc
from oracles import oracle_keywords


def as_tagged_sentences(doc):
    return [pos_tag(tokenize(s)) for s in doc.sentences()]


class TestScoring:
    def test_formula_example(self):
        # tf=2, wordcount=1, first sentence 0: 2 * (1+1) * (1+1) = 8.0
        doc = make_doc(["Vaccines work. Vaccines help."])
        cands = extract_candidates(doc, Gazetteer.empty())
        top = cands[0]
        assert top.phrase == "vaccines"
        assert top.base_score == pytest.approx(8.0)
        assert top.final_score == pytest.approx(8.0)
        assert not top.boosted

    def test_gazetteer_boost_outranks_equal_base(self):
        # two single-word nouns, both tf=1, same sentence; only one in gazetteer
        doc = make_doc(["Ferrets met weasels."])
        plain = extract_candidates(doc, Gazetteer.empty())
        scores = {c.phrase: c.base_score for c in plain}
        assert scores["ferrets"] == scores["weasels"]
        boosted = extract_candidates(doc, Gazetteer(entries=frozenset({"weasels"})))
        by_phrase = {c.phrase: c for c in boosted}
        assert by_phrase["weasels"].rank < by_phrase["ferrets"].rank
        assert by_phrase["weasels"].boosted

    def test_no_candidates(self):
        doc = make_doc(["He was. They were. It is."])
        with pytest.raises(NoCandidates):
            extract_candidates(doc, Gazetteer.empty())

    def test_limit_and_contiguous_ranks(self):
        text = " ".join(f"Topic{i} appeared." for i in range(25))
        doc = make_doc([text])
        cands = extract_candidates(doc, Gazetteer.empty())
        assert len(cands) == 10
        assert [c.rank for c in cands] == list(range(1, 11))

    def test_candidates_re_tag_to_noun_phrases(self, corpus):
        for article in corpus[:3]:
            doc = make_doc(article["paragraphs"], url=article["url"])
            for cand in extract_candidates(doc, Gazetteer.empty()):
                tags = [t for _, t in pos_tag(tokenize(cand.display))]
                assert matches_noun_phrase(tags), cand.display

    def test_matches_bruteforce_on_corpus_articles(self, corpus):
        gaz = frozenset({"immune response", "booster dose", "public health"})
        for article in corpus:
            doc = make_doc(article["paragraphs"], url=article["url"])
            mine = extract_candidates(doc, Gazetteer(entries=gaz))
            reference = oracle_keywords(as_tagged_sentences(doc), set(gaz))
            assert [(c.phrase, c.rank) for c in mine] == \
                [(r["phrase"], r["rank"]) for r in reference]
            for c, r in zip(mine, reference):
                assert c.base_score == pytest.approx(r["base_score"])
                assert c.final_score == pytest.approx(r["final_score"])
                assert c.boosted == r["boosted"]
                assert c.display == r["display"]

    def test_matches_bruteforce_on_random_texts(self):
        rng = random.Random(20240612)
        nouns = ["trial", "vaccine", "data", "panel", "review", "signal", "cohort"]
        adjs = ["hopeful", "famous", "active", "cautious"]
        verbs = ["showed", "said", "was", "remained", "found"]
        others = ["the", "a", "of", "in", "and", "they", "it"]
        pool = nouns * 3 + adjs * 2 + verbs * 2 + others * 3 + ["Geneva", "Atlas"]
        for _ in range(30):
            words = [rng.choice(pool) for _ in range(rng.randint(5, 180))]
            sentences = []
            start = 0
            while start < len(words):
                take = rng.randint(3, 12)
                sentences.append(" ".join(words[start:start + take]) + ".")
                start += take
            try:
                doc = make_doc([" ".join(sentences)])
            except ValueError:
                continue
            gaz = frozenset(rng.sample(nouns, 2))
            try:
                mine = extract_candidates(doc, Gazetteer(entries=gaz))
            except NoCandidates:
                mine = []
            reference = oracle_keywords(as_tagged_sentences(doc), set(gaz))
            assert [(c.phrase, c.rank) for c in mine] == \
                [(r["phrase"], r["rank"]) for r in reference]

    def test_boost_monotonicity(self, corpus):
        article = corpus[0]
        doc = make_doc(article["paragraphs"], url=article["url"])
        base = extract_candidates(doc, Gazetteer.empty())
        for cand in base[:5]:
            boosted = extract_candidates(doc, Gazetteer(entries=frozenset({cand.phrase})))
            new_rank = next(c.rank for c in boosted if c.phrase == cand.phrase)
            assert new_rank <= cand.rank

    def test_determinism(self, corpus):
        article = corpus[1]
        doc = make_doc(article["paragraphs"], url=article["url"])
        gaz = Gazetteer(entries=frozenset({"floods"}))
        assert extract_candidates(doc, gaz) == extract_candidates(doc, gaz)


class TestApplySelection:
    def _candidates(self):
        doc = make_doc(["Alpha topics met beta crates. Gamma rays appeared."])
        return extract_candidates(doc, Gazetteer.empty())

    def test_custom_matching_candidate_dedups_into_selected(self):
        cands = self._candidates()
        first, second = cands[0], cands[1]
        sel = apply_selection(cands, [first.phrase], [second.phrase.upper() + " "])
        assert second.phrase in sel.selected
        assert sel.custom == []

    def test_unknown_candidate(self):
        with pytest.raises(UnknownCandidate):
            apply_selection(self._candidates(), ["zzz not offered"], [])

    def test_empty_selection(self):
        with pytest.raises(EmptySelection):
            apply_selection(self._candidates(), [], ["", "   "])

    def test_custom_normalized_and_deduped(self):
        sel = apply_selection(self._candidates(), [], ["  Novel  Thing ", "novel thing"])
        assert sel.custom == ["novel thing"]

    def test_selected_ordered_by_rank(self):
        cands = self._candidates()
        sel = apply_selection(cands, [cands[2].phrase, cands[0].phrase], [])
        assert sel.selected == [cands[0].phrase, cands[2].phrase]

    def test_phrases_concatenates_selected_then_custom(self):
        cands = self._candidates()
        sel = apply_selection(cands, [cands[0].phrase], ["extra topic"])
        assert sel.phrases() == [cands[0].phrase, "extra topic"]
