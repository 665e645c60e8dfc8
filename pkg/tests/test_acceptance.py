"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints an ACCEPTANCE <criterion>: PASS/FAIL line via the
conftest hook. All randomized criteria use fixed seeds so runs are
reproducible.
"""

import io
import json
import random
import string
import time
from contextlib import redirect_stdout

import pytest

from evidex.agreement import LABELS, RatingMatrix, fleiss_kappa, mean_rating
from evidex.cli import main as cli_main
from evidex.errors import NoCandidates
from evidex.gateway import (
    SearchHit,
    aggregate_hits,
    build_news_query,
    build_scholar_query,
    parse_news_query,
    parse_scholar_query,
)
from evidex.keywords import Gazetteer, KeywordSelection, extract_candidates
from evidex.opinions import (
    contains_academic_org,
    contains_person_name,
    contains_quote_pair,
    default_lexicons,
    select_opinion_paragraphs,
)
from evidex.postag import matches_noun_phrase, pos_tag
from evidex.registry import KIND_DENIED, Denylist, SourceRegistry
from evidex.textproc import tokenize

from conftest import FIXTURES_DIR, SUBJECT_URL, make_doc
from oracles import (
    oracle_aggregate,
    oracle_fleiss,
    oracle_keywords,
    oracle_org,
    oracle_person,
    oracle_quote,
    oracle_select,
)

LEX = default_lexicons()


# --- criterion: opinion-selector oracle equivalence on the fixture corpus ---

def test_opinion_selector_oracle_equivalence(corpus, corpus_labels):
    total = sum(len(a["paragraphs"]) for a in corpus)
    assert len(corpus) == 10 and total >= 150

    started = time.perf_counter()
    selections = {}
    for article in corpus:
        doc = make_doc(article["paragraphs"], url=article["url"])
        selections[article["name"]] = select_opinion_paragraphs(doc, LEX)
    elapsed = time.perf_counter() - started
    assert elapsed < 5.0, f"selector took {elapsed:.2f}s on the corpus"

    mismatches = 0
    for article in corpus:
        oracle_idx = oracle_select(article["paragraphs"])
        expected = [article["paragraphs"][i] for i in oracle_idx]
        if selections[article["name"]] != expected:
            mismatches += 1
        assert oracle_idx == corpus_labels[article["name"]]
    assert mismatches == 0


# --- criterion: triple-predicate conjunction over generated paragraphs ---

def _paragraph_generator(rng: random.Random):
    firsts = ["Jane", "Omar", "Ingrid", "Tomas", "Priya", "Wei", "Lena", "Paulo"]
    lasts = ["Smith", "Keller", "Nair", "Chen", "Solberg", "Moreau", "Okafor"]
    cities = ["Kent", "Oslo", "Lagos", "Geneva", "Taipei", "Porto", "Vienna"]
    indicators = ["University", "Institute", "Academy", "College", "Laboratory"]
    caps = ["WHO", "CDC", "NASA", "UNICEF"]
    fillers = [
        "the committee reviewed the figures",
        "officials gathered for the briefing",
        "numbers moved little over the quarter",
        "it's a familiar story for the sector",
    ]
    long_quotes = [
        "the evidence points firmly in one direction",
        "we found no signal of harm in any subgroup",
        "these results should settle the question",
    ]
    short_quotes = ["fine", "noted", "unclear", "so be it"]

    def name_segment():
        kind = rng.randrange(5)
        first, last = rng.choice(firsts), rng.choice(lasts)
        if kind == 0:
            return f"Dr {first} {last} reviewed the data"
        if kind == 1:
            return f"Dr. {first} {last} chaired the panel"
        if kind == 2:
            return f"{first} {last} said the figures were solid"
        if kind == 3:
            return f"{first} {last}, the panel convener, said little"  # verb 4 away
        return f"{rng.choice(caps)} {rng.choice(caps)} said nothing"

    def org_segment():
        kind = rng.randrange(4)
        city, ind = rng.choice(cities), rng.choice(indicators)
        if kind == 0:
            return f"researchers at the {city} {ind} agreed"
        if kind == 1:
            return f"the {ind} of {city} published the report"
        if kind == 2:
            return f"she went to {ind.lower()} years ago"
        return f"the research centre stayed closed for repairs"

    def quote_segment():
        kind = rng.randrange(6)
        if kind == 0:
            return f'"{rng.choice(long_quotes)}," one slide read'
        if kind == 1:
            return f"“{rng.choice(long_quotes)}”"
        if kind == 2:
            return f"«{rng.choice(long_quotes)}»"
        if kind == 3:
            return f"'{rng.choice(long_quotes)},' the memo stated"
        if kind == 4:
            return f'"{rng.choice(short_quotes)}"'
        return "it's the board's own account"

    def paragraph():
        segments = []
        for maker in (name_segment, org_segment, quote_segment):
            if rng.random() < 0.7:
                segments.append(maker())
        if not segments or rng.random() < 0.3:
            segments.append(rng.choice(fillers))
        rng.shuffle(segments)
        return ". ".join(segments) + "."

    return paragraph


def test_triple_predicate_conjunction():
    rng = random.Random(20240815)
    make_paragraph = _paragraph_generator(rng)
    paragraphs = [make_paragraph() for _ in range(1000)]
    doc_chunks = [paragraphs[i:i + 50] for i in range(0, 1000, 50)]

    counterexamples = 0
    for chunk in doc_chunks:
        doc = make_doc(chunk)
        selected = set(select_opinion_paragraphs(doc, LEX))
        for p in chunk:
            conjunction = (contains_person_name(p, LEX)
                           and contains_academic_org(p, LEX)
                           and contains_quote_pair(p, LEX))
            if (p in selected) != conjunction:
                counterexamples += 1
            # the independent oracle must agree predicate by predicate
            if (oracle_person(p), oracle_org(p), oracle_quote(p)) != (
                contains_person_name(p, LEX),
                contains_academic_org(p, LEX),
                contains_quote_pair(p, LEX),
            ):
                counterexamples += 1
    assert counterexamples == 0


# --- criterion: query construction round-trip ---

def test_query_construction_round_trip():
    rng = random.Random(424242)
    alphabet = string.ascii_lowercase + string.digits + " -'"
    failures = 0
    for _ in range(500):
        n = rng.randint(1, 6)
        phrases = []
        while len(phrases) < n:
            raw = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 24)))
            cleaned = " ".join(raw.split())
            if cleaned and " AND " not in f" {cleaned} " and cleaned not in phrases:
                phrases.append(cleaned)
        sel = KeywordSelection(selected=phrases, custom=[])
        news = build_news_query(sel)
        scholar = build_scholar_query(sel)
        if parse_news_query(news.rendered) != list(news.keywords):
            failures += 1
        if parse_scholar_query(scholar.rendered) != list(scholar.keywords):
            failures += 1
        for keyword in scholar.keywords:
            if f'"{keyword}"' not in scholar.rendered:
                failures += 1
    assert failures == 0


# --- criterion: aggregation vs brute-force reference ---

def test_aggregation_matches_bruteforce():
    rng = random.Random(1234321)
    hosts = [f"host{i}.test" for i in range(8)] + ["www.npr.org", "www.bbc.com"]
    for _ in range(1000):
        def tier(engine):
            hits = []
            for r in range(rng.randint(0, 10)):
                url = (f"{rng.choice(['http', 'https'])}://{rng.choice(hosts)}"
                       f"/s{rng.randint(0, 6)}"
                       + rng.choice(["", "/", "?utm_source=a", "?p=1", "?fbclid=zz"]))
                hits.append(SearchHit(url=url, title="", snippet="",
                                      engine=engine, rank_in_engine=r + 1))
            return hits

        m, s, g = tier("mainstream"), tier("scientific"), tier("general")
        mine = aggregate_hits(m, s, g)
        assert mine == oracle_aggregate(m, s, g)
        assert len(mine) <= len(m) + len(s) + len(g)


# --- criterion: registry conformance + denylist filtering ---

def test_registry_conformance(registry):
    import json as _json

    from evidex.config import EvidexConfig
    from evidex.gateway import ENGINE_GENERAL, FixtureStore, SearchGateway

    cfg = EvidexConfig()
    mainstream = _json.loads(cfg.mainstream_registry_path.read_text("utf-8"))
    scientific = _json.loads(cfg.scientific_registry_path.read_text("utf-8"))
    assert len(mainstream) == 10 and len(scientific) == 10
    for entry in mainstream:
        assert registry.classify_source(f"https://{entry['domain']}").kind == "Mainstream"
    for entry in scientific:
        assert registry.classify_source(f"https://{entry['domain']}").kind == "Scientific"

    # property: a random denylist never leaks into general-tier output
    rng = random.Random(5150)
    import tempfile

    for _ in range(40):
        denied = {f"bad{i}-{rng.randint(0, 99)}.test" for i in range(rng.randint(1, 5))}
        denylist = Denylist(domains=frozenset(denied),
                            snapshot_date=registry.denylist.snapshot_date)
        patched = SourceRegistry(registry.mainstream, registry.scientific, denylist)
        hits = []
        for i in range(rng.randint(1, 12)):
            if rng.random() < 0.4 and denied:
                host = rng.choice(sorted(denied))
                host = rng.choice(["", "www.", "sub."]) + host
            else:
                host = f"fine{i}.test"
            hits.append({"url": f"https://{host}/item{i}", "title": "", "snippet": ""})
        with tempfile.TemporaryDirectory() as tmp:
            FixtureStore(tmp).save(ENGINE_GENERAL, "q", {"query": "q", "hits": hits})
            gateway = SearchGateway(cfg.with_(mode="replay", fixtures_dir=tmp), patched)
            out = gateway.search_news_tier(
                ENGINE_GENERAL,
                build_news_query(KeywordSelection(selected=["q"], custom=[])),
            )
        for hit in out:
            assert patched.classify_source(hit.url).kind != KIND_DENIED


# --- criterion: keyword engine contracts ---

def test_keyword_engine(corpus):
    rng = random.Random(987654)
    nouns = ["trial", "vaccine", "panel", "cohort", "signal", "review", "dataset"]
    adjs = ["famous", "hopeful", "active", "spurious"]
    verbs = ["said", "was", "showed", "remained", "appeared"]
    glue = ["the", "a", "of", "in", "and", "they"]

    # corpus articles plus random texts, all <= 200 tokens
    docs = [make_doc(a["paragraphs"][:6], url=a["url"]) for a in corpus]
    for _ in range(40):
        words = []
        while len(words) < rng.randint(10, 190):
            words.append(rng.choice(nouns + adjs + verbs + glue + ["Madrid", "Atlas"]))
        sentences, start = [], 0
        while start < len(words):
            take = rng.randint(4, 10)
            sentences.append(" ".join(words[start:start + take]) + ".")
            start += take
        docs.append(make_doc([" ".join(sentences)]))

    for doc in docs:
        assert len(tokenize(doc.body_text)) <= 200 or doc.url.startswith("https://news-fixture")
        gaz_entries = frozenset(rng.sample(nouns, 3))
        gazetteer = Gazetteer(entries=gaz_entries)
        try:
            cands = extract_candidates(doc, gazetteer)
        except NoCandidates:
            cands = []
        assert len(cands) <= 10
        for cand in cands:
            tags = [t for _, t in pos_tag(tokenize(cand.display))]
            assert matches_noun_phrase(tags), cand.display
        tagged = [pos_tag(tokenize(s)) for s in doc.sentences()]
        reference = oracle_keywords(tagged, set(gaz_entries))
        assert [(c.phrase, c.rank, c.boosted) for c in cands] == \
            [(r["phrase"], r["rank"], r["boosted"]) for r in reference]
        for c, r in zip(cands, reference):
            assert c.base_score == pytest.approx(r["base_score"], abs=1e-12)
            assert c.final_score == pytest.approx(r["final_score"], abs=1e-12)

    # boost strictly raises rank on equal base score
    for _ in range(50):
        a, b = rng.sample(nouns, 2)
        doc = make_doc([f"{a.capitalize()} met {b}."])
        plain = {c.phrase: c for c in extract_candidates(doc, Gazetteer.empty())}
        assert plain[a].base_score == plain[b].base_score
        boosted = {c.phrase: c for c in extract_candidates(
            doc, Gazetteer(entries=frozenset({b})))}
        assert boosted[b].rank < boosted[a].rank


# --- criterion: evaluation kit ---

def test_evalkit():
    # perfect agreement across multiple categories
    m = RatingMatrix(
        items=["i1", "i2", "i3"], raters=["r1", "r2", "r3"],
        ratings=[["FullyM"] * 3, ["HM"] * 3, ["FullyM"] * 3],
    )
    assert abs(fleiss_kappa(m) - 1.0) < 1e-12

    # the 14-rater x 10-item worked table
    counts = [
        [0, 0, 0, 0, 14], [0, 2, 6, 4, 2], [0, 0, 3, 5, 6], [0, 3, 9, 2, 0],
        [2, 2, 8, 1, 1], [7, 7, 0, 0, 0], [3, 2, 6, 3, 0], [2, 5, 3, 2, 2],
        [6, 5, 2, 1, 0], [0, 2, 2, 3, 7],
    ]
    rows = []
    for row_counts in counts:
        row = []
        for label, count in zip(LABELS, row_counts):
            row.extend([label] * count)
        rows.append(row)
    worked = RatingMatrix(items=[f"i{i}" for i in range(10)],
                          raters=[f"r{j}" for j in range(14)], ratings=rows)
    assert fleiss_kappa(worked) == pytest.approx(oracle_fleiss(rows), abs=1e-9)

    rng = random.Random(31337)
    for _ in range(100):
        n_items, n_raters = rng.randint(2, 12), rng.randint(2, 9)
        ratings = [[rng.choice(LABELS) for _ in range(n_raters)] for _ in range(n_items)]
        matrix = RatingMatrix(items=[f"i{i}" for i in range(n_items)],
                              raters=[f"r{j}" for j in range(n_raters)],
                              ratings=ratings)
        assert fleiss_kappa(matrix) == pytest.approx(oracle_fleiss(ratings), abs=1e-9)

    base = fleiss_kappa(worked)
    base_mean = mean_rating(worked)
    for _ in range(100):
        shuffled_rows = [list(r) for r in rows]
        rng.shuffle(shuffled_rows)
        for row in shuffled_rows:
            rng.shuffle(row)
        shuffled = RatingMatrix(items=[f"i{i}" for i in range(10)],
                                raters=[f"r{j}" for j in range(14)],
                                ratings=shuffled_rows)
        assert fleiss_kappa(shuffled) == pytest.approx(base, abs=1e-9)
        assert mean_rating(shuffled) == pytest.approx(base_mean, abs=1e-12)


# --- criterion: end-to-end replay determinism ---

def test_end_to_end_replay_determinism():
    argv = [
        "check", SUBJECT_URL,
        "--offline", "--fixtures", str(FIXTURES_DIR),
        "--keywords", "immune response,booster dose",
        "--format", "json",
    ]

    outputs = []
    started = time.perf_counter()
    for _ in range(3):
        buffer = io.StringIO()
        with redirect_stdout(buffer):
            code = cli_main(list(argv))
        assert code == 0
        outputs.append(buffer.getvalue().encode("utf-8"))
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0, f"three offline runs took {elapsed:.2f}s"

    assert outputs[0] == outputs[1] == outputs[2]
    report = json.loads(outputs[0])
    assert report["cards"] and report["publications"] and report["researchers"]
