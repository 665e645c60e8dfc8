import type { Candidate } from "./types.js";

export function normalizePhrase(raw: string): string {
  return raw.toLowerCase().split(/\s+/).filter(Boolean).join(" ");
}

/**
 * Selection model behind the keyword popup: chosen candidate phrases plus
 * free-text custom keywords. A custom entry equal to an offered candidate
 * selects that candidate instead of duplicating it, so
 * chosen is always a subset of candidates and custom is disjoint from both.
 */
export class SelectionState {
  readonly candidates: Candidate[];
  private chosen = new Set<string>();
  private customEntries: string[] = [];

  constructor(candidates: Candidate[]) {
    this.candidates = candidates;
  }

  toggle(phrase: string): boolean {
    if (!this.candidates.some((c) => c.phrase === phrase)) {
      throw new Error(`not an offered candidate: ${phrase}`);
    }
    if (this.chosen.has(phrase)) {
      this.chosen.delete(phrase);
      return false;
    }
    this.chosen.add(phrase);
    return true;
  }

  isChosen(phrase: string): boolean {
    return this.chosen.has(phrase);
  }

  /** Returns the kind of entry the raw text became, or null for blank input. */
  addCustom(raw: string): "selected" | "custom" | null {
    const phrase = normalizePhrase(raw);
    if (!phrase) {
      return null;
    }
    if (this.candidates.some((c) => c.phrase === phrase)) {
      this.chosen.add(phrase);
      return "selected";
    }
    if (!this.customEntries.includes(phrase)) {
      this.customEntries.push(phrase);
    }
    return "custom";
  }

  removeCustom(phrase: string): void {
    this.customEntries = this.customEntries.filter((p) => p !== phrase);
  }

  get selected(): string[] {
    // candidate order, not click order
    return this.candidates
      .filter((c) => this.chosen.has(c.phrase))
      .map((c) => c.phrase);
  }

  get custom(): string[] {
    return [...this.customEntries];
  }

  get empty(): boolean {
    return this.chosen.size === 0 && this.customEntries.length === 0;
  }
}
