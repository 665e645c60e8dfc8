import type { BundleReport, Candidate } from "../src/types";

export function candidates(n = 10): Candidate[] {
  const phrases = [
    "immune response", "booster dose", "clinical trial", "public health",
    "antibody levels", "memory cells", "waning protection", "vaccination round",
    "surveillance data", "dosing schedule",
  ];
  return phrases.slice(0, n).map((phrase, i) => ({
    phrase,
    display: phrase,
    boosted: i < 2,
    rank: i + 1,
    score: 20 - i,
  }));
}

export const SAMPLE_BUNDLE: BundleReport = {
  query_news: "immune response AND booster dose",
  query_scholar: '"immune response" AND "booster dose"',
  cards: [
    {
      source_name: "NPR",
      source_tier: "Mainstream",
      mbfc_url: "https://ratings.test/npr/",
      published_at: "2024-05-16",
      article_url: "https://news-a.test/one",
      opinion_paragraphs: ["“First quoted view,” said Dr One of Alpha University."],
      is_summary_card: false,
    },
    {
      source_name: "The Conversation",
      source_tier: "Scientific",
      mbfc_url: "https://ratings.test/conversation/",
      published_at: "2024-05-12",
      article_url: "https://news-b.test/two",
      opinion_paragraphs: ["Summary sentence one.", "Summary sentence two."],
      is_summary_card: true,
    },
    {
      source_name: "health-site.test",
      source_tier: "General",
      mbfc_url: null,
      published_at: null,
      article_url: "https://news-c.test/three",
      opinion_paragraphs: ["“Third quoted view,” noted Prof Three of Gamma Institute."],
      is_summary_card: false,
    },
  ],
  publications: [
    {title: "Pub One", venue: "Venue A", year: 2023, abstract: "Abstract one."},
    {title: "Pub Two", venue: "Venue B", year: 2024, abstract: "Abstract two."},
  ],
  researchers: [
    {name: "Elena Varga", affiliation: "Semmelweis University",
     links: ["https://reg.test/s/1"], count: 3},
    {name: "Marcus Feld", affiliation: null, links: [], count: 1},
  ],
  warnings: ["skipped https://dead.test/x: no recorded page"],
};

export function emptyBundle(): BundleReport {
  return {
    query_news: "q",
    query_scholar: '"q"',
    cards: [],
    publications: [],
    researchers: [],
    warnings: ["mainstream search failed: no fixture"],
  };
}
