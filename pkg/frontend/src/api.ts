import type { BundleReport, BundleStatus, CreateSessionResponse } from "./types.js";

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function reasonOf(response: Response): Promise<string> {
  try {
    const body = await response.json();
    if (body && typeof body.reason === "string" && body.reason) {
      return body.reason;
    }
    if (body && typeof body.error === "string") {
      return body.error;
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed with HTTP ${response.status}`;
}

export class EvidexClient {
  constructor(private baseUrl: string) {}

  private url(path: string): string {
    return this.baseUrl.replace(/\/$/, "") + path;
  }

  async createSession(articleUrl: string): Promise<CreateSessionResponse> {
    const response = await fetch(this.url("/v1/sessions"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ url: articleUrl }),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await reasonOf(response));
    }
    return (await response.json()) as CreateSessionResponse;
  }

  async submitSelection(
    sessionId: string,
    selected: string[],
    custom: string[],
  ): Promise<void> {
    const response = await fetch(
      this.url(`/v1/sessions/${sessionId}/selection`),
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ selected, custom }),
      },
    );
    if (!response.ok) {
      throw new ApiError(response.status, await reasonOf(response));
    }
  }

  async getBundle(sessionId: string): Promise<BundleStatus> {
    const response = await fetch(this.url(`/v1/sessions/${sessionId}/bundle`));
    if (response.status === 200) {
      return { kind: "ready", report: (await response.json()) as BundleReport };
    }
    if (response.status === 202) {
      const body = await response.json();
      return { kind: "pending", state: String(body.state ?? "Searching") };
    }
    throw new ApiError(response.status, await reasonOf(response));
  }
}

export interface PollOptions {
  intervalMs?: number;
  timeoutMs?: number;
}

const sleep = (ms: number) => new Promise<void>((resolve) => setTimeout(resolve, ms));

/** Poll every second until the bundle is ready, capped at one minute. */
export async function pollBundle(
  client: EvidexClient,
  sessionId: string,
  options: PollOptions = {},
): Promise<BundleReport> {
  const interval = options.intervalMs ?? 1000;
  const timeout = options.timeoutMs ?? 60000;
  const deadline = Date.now() + timeout;
  for (;;) {
    const status = await client.getBundle(sessionId);
    if (status.kind === "ready") {
      return status.report;
    }
    if (Date.now() + interval > deadline) {
      throw new ApiError(0, `timed out waiting for results (state: ${status.state})`);
    }
    await sleep(interval);
  }
}
