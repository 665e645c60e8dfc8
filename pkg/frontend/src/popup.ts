import { ApiError, EvidexClient, pollBundle } from "./api.js";
import { renderEvidencePanel } from "./components/evidencePanel.js";
import { renderKeywordPopup } from "./components/keywordPopup.js";
import type { Phase } from "./types.js";

declare const chrome: {
  tabs?: {
    query(info: { active: boolean; currentWindow: boolean }): Promise<{ url?: string }[]>;
  };
} | undefined;

const DEFAULT_SERVICE_ORIGIN = "http://localhost:8000";

async function activeTabUrl(): Promise<string | null> {
  if (typeof chrome !== "undefined" && chrome?.tabs) {
    const tabs = await chrome.tabs.query({ active: true, currentWindow: true });
    return tabs[0]?.url ?? null;
  }
  return null;
}

export class PopupController {
  phase: Phase = "PickKeywords";

  constructor(
    private client: EvidexClient,
    private root: HTMLElement,
  ) {}

  private show(phase: Phase, message = ""): void {
    this.phase = phase;
    if (phase === "Waiting") {
      this.root.textContent = "";
      const note = document.createElement("p");
      note.className = "waiting-note";
      note.textContent = "Searching credible sources…";
      this.root.appendChild(note);
    } else if (phase === "Error") {
      this.root.textContent = "";
      const box = document.createElement("div");
      box.className = "error-box";
      box.setAttribute("role", "alert");
      box.textContent = message;
      this.root.appendChild(box);
    }
  }

  async start(articleUrl: string): Promise<void> {
    let created;
    try {
      created = await this.client.createSession(articleUrl);
    } catch (error) {
      this.show("Error", error instanceof Error ? error.message : String(error));
      return;
    }

    renderKeywordPopup(
      this.root,
      created.candidates,
      async (selected, custom) => {
        try {
          await this.client.submitSelection(created.session_id, selected, custom);
        } catch (error) {
          // shown inline by the popup; rethrow so it re-enables submit
          throw error instanceof ApiError
            ? error
            : new Error(error instanceof Error ? error.message : String(error));
        }
        this.show("Waiting");
        try {
          const report = await pollBundle(this.client, created.session_id);
          this.phase = "Results";
          renderEvidencePanel(this.root, report);
        } catch (error) {
          this.show("Error", error instanceof Error ? error.message : String(error));
        }
      },
    );
    this.phase = "PickKeywords";
  }
}

export async function bootstrap(
  root: HTMLElement | null = document.getElementById("app"),
  serviceOrigin: string = DEFAULT_SERVICE_ORIGIN,
): Promise<PopupController | null> {
  if (!root) {
    return null;
  }
  const controller = new PopupController(new EvidexClient(serviceOrigin), root);
  const url = await activeTabUrl();
  if (!url) {
    root.textContent = "Open a news article tab, then launch this panel.";
    return controller;
  }
  await controller.start(url);
  return controller;
}

// Only auto-run inside a real popup document.
if (typeof document !== "undefined" && document.getElementById("app")) {
  void bootstrap();
}
