#!/usr/bin/env python3
"""Build the offline replay fixture set under tests/data/fixtures/.

The scenario: a fact-check of a claim that booster shots exhaust the immune
system. One subject article, three tiers of recorded search hits (including
a denylisted domain, a duplicate URL and a dead link), a scholarly result
set with overlapping authors, and author profile records.
"""

import hashlib
import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "data" / "fixtures"

KEYWORDS = ["immune response", "booster dose"]
NEWS_QUERY = " AND ".join(KEYWORDS)
SCHOLAR_QUERY = " AND ".join(f'"{k}"' for k in KEYWORDS)

SUBJECT_URL = "https://health-desk-fixture.test/checks/booster-exhaustion-claim"

RETRIEVED_AT = "2024-05-20T09:30:00+00:00"


def page(title: str, published: str, author: str, paragraphs: list[str],
         sidebar: str = "Trending now: five stories you missed") -> str:
    body = "\n".join(f"      <p>{p}</p>" for p in paragraphs)
    return f"""<!DOCTYPE html>
<html lang="en">
  <head>
    <meta charset="utf-8">
    <meta property="og:title" content="{title}">
    <meta property="article:published_time" content="{published}T08:00:00Z">
    <meta name="author" content="{author}">
    <title>{title}</title>
  </head>
  <body>
    <header><nav><a href="/">Home</a> <a href="/health">Health</a></nav></header>
    <article class="story-body">
      <h1>{title}</h1>
{body}
    </article>
    <aside class="sidebar"><h2>Related</h2><p>{sidebar}</p></aside>
    <footer><p>Contact us | Terms</p></footer>
  </body>
</html>
"""


ARTICLES = {
    SUBJECT_URL: page(
        "Do booster shots exhaust the immune system? What the evidence says",
        "2024-05-18", "Desk Team",
        [
            "A widely shared post claims that each new booster dose will exhaust the immune response and leave the body defenceless.",
            "The immune response does not work that way, according to the researchers who study it. Repeated exposure trains immunity; it does not use it up.",
            "Three large studies published this year measured the immune response after a third and fourth booster dose. None found evidence of exhaustion.",
            "“T-cell repertoires remained broad and functional after every booster dose we examined,” said Dr Helena Brandt of the Rotterdam Immunology Institute.",
            "The claim appears to rest on a misreading of a laboratory preprint that described a narrowing of antibody classes, not a failure of the immune response.",
            "Public health agencies continue to recommend the booster dose for older adults and clinically vulnerable groups this autumn.",
            "Experts say the fastest way to check such claims is to look for the original study and ask whether the measured outcome matches the claimed harm.",
        ],
    ),
    "https://www.npr.org/2024/05/16/booster-immune-studies": page(
        "Booster studies find no sign of immune exhaustion",
        "2024-05-16", "Health Desk",
        [
            "Two new analyses released this week push back on claims that repeat vaccination wears out the body's defences.",
            "“We looked specifically for markers of exhaustion and found none in any age group,” said Prof Miriam Castell of the Barcelona Institute of Global Health.",
            "The analyses tracked 18,000 adults over two winters, comparing infection outcomes across dosing histories.",
            "“Immune memory broadened with each exposure rather than narrowing,” added Dr Samuel Osei, who runs the vaccines laboratory at the Accra University of Science.",
            "Both teams cautioned that protection against mild infection still fades within months.",
        ],
    ),
    "https://www.bbc.com/news/health-booster-immunity": page(
        "No evidence boosters weaken immunity, regulators say",
        "2024-05-17", "Science Correspondent",
        [
            "Claims that boosters 'use up' the immune system have spread widely online this month.",
            "“There is simply no clinical signal of cumulative harm in the surveillance data,” said Prof Eleanor Whitby of the Manchester College of Immunology.",
            "Regulators in the UK and EU reviewed the same adverse-event databases and reached the same conclusion.",
        ],
    ),
    "https://www.sciencealert.com/booster-immune-response-evidence": page(
        "Immunity is not a battery: what repeat vaccination really does",
        "2024-05-15", "Staff Writer",
        [
            "The idea that immunity is a battery that drains with use misunderstands how memory cells work, researchers say.",
            "“Each antigen encounter adds depth to the repertoire; the system is built for repetition,” explained Dr Nina Kovač of the Ljubljana Institute for Biomedical Research.",
            "A separate modelling study put the protective effect of a fourth dose at 60 to 70 percent against hospital admission.",
        ],
    ),
    "https://www.theconversation.com/boosters-and-your-immune-system-what-we-know": page(
        "Boosters and your immune system: what the evidence actually shows",
        "2024-05-12", "Immunology Researcher",
        [
            "As an immunologist, I spend my days measuring what vaccines do to T cells. The question I am asked most often this year is whether boosters wear the system out.",
            "The short answer is no. Immune memory is not a fuel tank that empties; it is a library that grows with every edition we add.",
            "Exhaustion is a real phenomenon in chronic infections, where the immune system faces the same antigen continuously for months. A booster given twice a year does not create those conditions.",
            "Our laboratory measured receptor diversity before and after repeated doses. Diversity expanded in every cohort we followed.",
            "What does fade is antibody concentration, and that decline is normal. Protection against severe disease is maintained by memory cells that respond within days of an exposure.",
            "The misunderstanding spreads because a narrowing of antibody classes reported in one preprint was read as proof of system-wide fatigue.",
            "Reading past the headline of that preprint shows the authors themselves warning against exactly that interpretation.",
            "Boosters remain most valuable for older adults, whose memory responses need more frequent reminders.",
        ],
    ),
    "https://www.sciencedaily.com/releases/2024/05/booster-cells": page(
        "Booster vaccination restores neutralising titres within two weeks",
        "2024-05-14", "Press Office",
        [
            "Researchers report that booster vaccination restored neutralising titres within two weeks in all study arms.",
            "The work, funded by the national research agency, analysed blood samples from 2,400 participants across four sites.",
            "Follow-up sampling is planned at six and twelve months to track the durability of the response over time.",
        ],
    ),
    "https://www.news-medical.test/20240517/booster-immunity-review": page(
        "Review: repeat vaccination and immune function",
        "2024-05-17", "Editorial Team",
        [
            "A new review summarises what is known about repeat vaccination and immune function in adults.",
            "“The exhaustion narrative confuses T-cell phenotype markers with clinical dysfunction,” noted Prof David Lin of the Taipei Medical University.",
            "The review calls for clearer public communication about what antibody waning does and does not mean for protection.",
        ],
    ),
}

DEAD_LINK = "https://www.reuters.com/health/booster-analysis-2024"

HITS = {
    "mainstream": [
        {"url": "https://www.npr.org/2024/05/16/booster-immune-studies",
         "title": "Booster studies find no sign of immune exhaustion",
         "snippet": "Two new analyses push back on claims that repeat vaccination wears out the body's defences."},
        {"url": DEAD_LINK,
         "title": "Analysis: the booster exhaustion claim",
         "snippet": "What the surveillance data actually show about repeat dosing."},
        {"url": "https://www.bbc.com/news/health-booster-immunity",
         "title": "No evidence boosters weaken immunity, regulators say",
         "snippet": "Regulators reviewed adverse-event databases and found no cumulative harm signal."},
    ],
    "scientific": [
        {"url": "https://www.sciencealert.com/booster-immune-response-evidence",
         "title": "Immunity is not a battery: what repeat vaccination really does",
         "snippet": "Memory cells gain depth with each antigen encounter, researchers explain."},
        {"url": "https://www.theconversation.com/boosters-and-your-immune-system-what-we-know",
         "title": "Boosters and your immune system: what the evidence actually shows",
         "snippet": "An immunologist explains why immune memory is a library, not a fuel tank."},
        {"url": "https://www.sciencedaily.com/releases/2024/05/booster-cells",
         "title": "Booster vaccination restores neutralising titres within two weeks",
         "snippet": "Blood samples from 2,400 participants show rapid recovery of neutralising titres."},
    ],
    "general": [
        {"url": "https://www.news-medical.test/20240517/booster-immunity-review",
         "title": "Review: repeat vaccination and immune function",
         "snippet": "A review separates T-cell phenotype markers from clinical dysfunction."},
        {"url": "https://www.naturalnews.com/2024-05-booster-panic",
         "title": "What they will not tell you about boosters",
         "snippet": "The claims the mainstream refuses to cover."},
        {"url": "http://www.NPR.org/2024/05/16/booster-immune-studies/?utm_source=feed&utm_medium=rss",
         "title": "Booster studies find no sign of immune exhaustion",
         "snippet": "Syndicated copy of the NPR analysis piece."},
    ],
}

RECORDS = [
    {"id": "SCP-840221",
     "title": "Repeated mRNA vaccination and T-cell repertoire breadth: a longitudinal cohort",
     "venue": "Journal of Translational Immunology", "year": 2023,
     "abstract": "We followed 1,214 adults across four vaccination rounds and quantified receptor diversity. Repertoire breadth increased monotonically with exposure count.",
     "authors": [
         {"author_id": "A-77001", "display_name": "Elena Varga"},
         {"author_id": "A-77002", "display_name": "Marcus Feld"},
     ]},
    {"id": "SCP-851133",
     "title": "Hybrid immunity after fourth-dose boosters in adults over 65",
     "venue": "Vaccine Research", "year": 2024,
     "abstract": "Fourth-dose boosters restored neutralising capacity in older adults within 14 days, with no evidence of attenuated recall responses.",
     "authors": [
         {"author_id": "A-77001", "display_name": "Elena Varga"},
         {"author_id": "A-77003", "display_name": "Aiko Tanaka"},
     ]},
    {"id": "SCP-829004",
     "title": "No evidence of immune exhaustion following repeated antigen exposure",
     "venue": "Clinical Epidemiology Letters", "year": 2022,
     "abstract": "Exhaustion markers remained at baseline across repeated vaccine exposures in a registry-linked cohort of 23,000 participants.",
     "authors": [
         {"author_id": "A-77002", "display_name": "Marcus Feld"},
         {"author_id": "A-77001", "display_name": "Elena Varga"},
     ]},
    {"id": "SCP-860412",
     "title": "Public perceptions of booster safety messaging: a survey experiment",
     "venue": "Health Communication Quarterly", "year": 2024,
     "abstract": "Framing booster guidance around memory formation rather than antibody decline increased stated uptake intentions by 12 points.",
     "authors": [
         {"author_id": "A-77004", "display_name": "Lucía Romero"},
     ]},
]

PROFILES = {
    "A-77001": {
        "scopus": {
            "name": "Elena Varga",
            "affiliation": "Semmelweis University",
            "profile_url": "https://registry-fixture.test/scopus/A-77001",
            "subject_areas": ["Immunology", "Vaccinology"],
        },
        "orcid": {
            "name": "E. Varga",
            "profile_url": "https://registry-fixture.test/orcid/0000-0001-7700-0001",
            "homepage": "https://varga-lab.test",
        },
    },
    "A-77002": {
        "orcid": {
            "name": "Marcus Feld",
            "affiliation": "Lund University",
            "profile_url": "https://registry-fixture.test/orcid/0000-0002-7700-0002",
        },
    },
    "A-77003": {
        "scopus": {
            "name": "Aiko Tanaka",
            "affiliation": "Osaka Metropolitan University",
            "profile_url": "https://registry-fixture.test/scopus/A-77003",
            "subject_areas": ["Geriatric Medicine"],
            "email": "a.tanaka@example.test",
            "homepage": "https://tanaka.example.test",
        },
    },
    # A-77004 has no profile fixture on purpose: exercises the warning path.
}


def sha(key: str) -> str:
    return hashlib.sha256(key.encode("utf-8")).hexdigest()


def write_json(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", "utf-8")


def main() -> None:
    articles_dir = FIXTURES / "articles"
    articles_dir.mkdir(parents=True, exist_ok=True)
    for url, html in ARTICLES.items():
        digest = sha(url)
        (articles_dir / f"{digest}.html").write_text(html, "utf-8")
        write_json(articles_dir / f"{digest}.meta.json",
                   {"url": url, "final_url": url, "status": 200})

    for engine, hits in HITS.items():
        write_json(FIXTURES / engine / f"{sha(NEWS_QUERY)}.json", {
            "query": NEWS_QUERY,
            "engine_id": engine,
            "retrieved_at": RETRIEVED_AT,
            "hits": hits,
        })

    write_json(FIXTURES / "scholar" / f"{sha(SCHOLAR_QUERY)}.json", {
        "query": SCHOLAR_QUERY,
        "engine_id": "scholar",
        "retrieved_at": RETRIEVED_AT,
        "records": RECORDS,
    })

    for author_id, registries in PROFILES.items():
        write_json(FIXTURES / "profiles" / f"{sha(author_id)}.json", {
            "author_id": author_id,
            "retrieved_at": RETRIEVED_AT,
            "registries": registries,
        })

    print(f"fixtures written under {FIXTURES}")
    print(f"news query:    {NEWS_QUERY}")
    print(f"scholar query: {SCHOLAR_QUERY}")
    print(f"subject url:   {SUBJECT_URL}")


if __name__ == "__main__":
    main()
