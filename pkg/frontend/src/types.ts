// Wire types mirroring the session API JSON contract. The UI consumes these
// verbatim and never reorders or re-ranks what the server sends.

export interface Candidate {
  phrase: string;
  display: string;
  boosted: boolean;
  rank: number;
  score: number;
}

export interface CreateSessionResponse {
  session_id: string;
  state: string;
  candidates: Candidate[];
}

export interface EvidenceCardView {
  source_name: string;
  source_tier: "Mainstream" | "Scientific" | "General";
  mbfc_url: string | null;
  published_at: string | null;
  article_url: string;
  opinion_paragraphs: string[];
  is_summary_card: boolean;
}

export interface PublicationView {
  title: string;
  venue: string;
  year: number;
  abstract: string;
}

export interface ResearcherView {
  name: string;
  affiliation: string | null;
  links: string[];
  count: number;
}

export interface BundleReport {
  query_news: string;
  query_scholar: string;
  cards: EvidenceCardView[];
  publications: PublicationView[];
  researchers: ResearcherView[];
  warnings: string[];
}

export type BundleStatus =
  | { kind: "ready"; report: BundleReport }
  | { kind: "pending"; state: string };

export type Phase = "PickKeywords" | "Waiting" | "Results" | "Error";
