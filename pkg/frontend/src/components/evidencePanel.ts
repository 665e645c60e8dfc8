import type { BundleReport, EvidenceCardView } from "../types.js";

const TIER_ICONS: Record<EvidenceCardView["source_tier"], string> = {
  Mainstream: "\u{1F4F0}", // newspaper
  Scientific: "\u{1F52C}", // microscope
  General: "\u{1F310}",    // globe
};

export interface PanelOptions {
  openUrl?: (url: string) => void;
}

function section(title: string): HTMLElement {
  const wrapper = document.createElement("section");
  const heading = document.createElement("h2");
  heading.textContent = title;
  wrapper.appendChild(heading);
  return wrapper;
}

function placeholder(text: string): HTMLElement {
  const p = document.createElement("p");
  p.className = "placeholder";
  p.textContent = text;
  return p;
}

function renderCard(card: EvidenceCardView, openUrl: (url: string) => void): HTMLElement {
  const box = document.createElement("article");
  box.className = "evidence-card";
  box.dataset.tier = card.source_tier;

  const header = document.createElement("header");
  const icon = document.createElement("span");
  icon.className = "tier-icon";
  icon.title = card.source_tier;
  icon.textContent = TIER_ICONS[card.source_tier];
  header.appendChild(icon);

  const name = document.createElement("span");
  name.className = "source-name";
  name.textContent = card.source_name;
  header.appendChild(name);

  // credibility tick only for the curated tiers
  if (card.source_tier !== "General" && card.mbfc_url) {
    const tick = document.createElement("a");
    tick.className = "mbfc-tick";
    tick.href = card.mbfc_url;
    tick.target = "_blank";
    tick.rel = "noopener";
    tick.title = "Source credibility rating";
    tick.textContent = "✔";
    tick.addEventListener("click", (event) => event.stopPropagation());
    header.appendChild(tick);
  }

  const date = document.createElement("span");
  date.className = "publish-date";
  date.textContent = card.published_at ?? "date unknown";
  header.appendChild(date);
  box.appendChild(header);

  if (card.is_summary_card) {
    const badge = document.createElement("span");
    badge.className = "summary-badge";
    badge.textContent = "article summary";
    box.appendChild(badge);
  }

  for (const paragraph of card.opinion_paragraphs) {
    const p = document.createElement("p");
    p.className = "opinion-paragraph";
    p.textContent = paragraph;
    box.appendChild(p);
  }

  // the whole box opens the article for further reading
  box.addEventListener("click", () => openUrl(card.article_url));
  return box;
}

/**
 * Results view: expert-opinion cards, publications, researchers, in exactly
 * the order the server returned them, plus a warning strip when the bundle
 * carries warnings.
 */
export function renderEvidencePanel(
  container: HTMLElement,
  report: BundleReport,
  options: PanelOptions = {},
): void {
  const openUrl = options.openUrl ?? ((url: string) => window.open(url, "_blank"));
  container.textContent = "";

  if (report.warnings.length > 0) {
    const strip = document.createElement("div");
    strip.className = "warning-strip";
    strip.setAttribute("role", "status");
    for (const warning of report.warnings) {
      const line = document.createElement("p");
      line.textContent = warning;
      strip.appendChild(line);
    }
    container.appendChild(strip);
  }

  const cards = section("Expert opinions in the news");
  cards.className = "cards-section";
  if (report.cards.length === 0) {
    cards.appendChild(placeholder("No expert opinions were found for these keywords."));
  }
  for (const card of report.cards) {
    cards.appendChild(renderCard(card, openUrl));
  }
  container.appendChild(cards);

  const pubs = section("Peer-reviewed publications");
  pubs.className = "publications-section";
  if (report.publications.length === 0) {
    pubs.appendChild(placeholder("No publications were found for these keywords."));
  }
  for (const pub of report.publications) {
    const box = document.createElement("article");
    box.className = "publication";
    const title = document.createElement("h3");
    title.textContent = pub.title;
    const meta = document.createElement("p");
    meta.className = "publication-meta";
    meta.textContent = `${pub.venue} · ${pub.year}`;
    const abstract = document.createElement("p");
    abstract.className = "publication-abstract";
    abstract.textContent = pub.abstract;
    box.append(title, meta, abstract);
    pubs.appendChild(box);
  }
  container.appendChild(pubs);

  const researchers = section("Researchers on this topic");
  researchers.className = "researchers-section";
  if (report.researchers.length === 0) {
    researchers.appendChild(placeholder("No researcher profiles were found."));
  }
  const list = document.createElement("ol");
  list.className = "researcher-list";
  for (const r of report.researchers) {
    const item = document.createElement("li");
    item.className = "researcher";
    const name = document.createElement("span");
    name.className = "researcher-name";
    name.textContent = r.name;
    item.appendChild(name);
    if (r.affiliation) {
      const affiliation = document.createElement("span");
      affiliation.className = "researcher-affiliation";
      affiliation.textContent = ` — ${r.affiliation}`;
      item.appendChild(affiliation);
    }
    const count = document.createElement("span");
    count.className = "researcher-count";
    count.textContent = ` (${r.count} publication${r.count === 1 ? "" : "s"} here)`;
    item.appendChild(count);
    for (const link of r.links) {
      const anchor = document.createElement("a");
      anchor.href = link;
      anchor.target = "_blank";
      anchor.rel = "noopener";
      anchor.className = "researcher-link";
      anchor.textContent = "profile";
      item.append(" ", anchor);
    }
    list.appendChild(item);
  }
  if (report.researchers.length > 0) {
    researchers.appendChild(list);
  }
  container.appendChild(researchers);
}
