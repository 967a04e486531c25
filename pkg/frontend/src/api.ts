// Thin client over the prover API. All proof state lives on the server;
// every mutation round-trips through it.

import type {
  AttemptPayload,
  AttemptRequest,
  CommitRequest,
  ConfigPayload,
  FragmentsPayload,
  HistoryPayload,
  StatusPayload,
  TightPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class ProverApi {
  constructor(private base: string, private fetcher: typeof fetch = fetch) {}

  private async get<T>(path: string): Promise<T> {
    const res = await this.fetcher(this.base + path);
    if (!res.ok) throw new ApiError(res.status, await res.text());
    return (await res.json()) as T;
  }

  private async post<T>(path: string, body: unknown): Promise<T> {
    const res = await this.fetcher(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) throw new ApiError(res.status, await res.text());
    return (await res.json()) as T;
  }

  status(): Promise<StatusPayload> {
    return this.get("/api/status");
  }

  tight(limit = 0): Promise<TightPayload> {
    return this.get(`/api/tight${limit ? `?limit=${limit}` : ""}`);
  }

  config(word: string): Promise<ConfigPayload> {
    // slashes do not survive URL routing; the API accepts dots
    return this.get(`/api/config/${encodeURIComponent(word.replaceAll("/", "."))}`);
  }

  fragments(): Promise<FragmentsPayload> {
    return this.get("/api/fragments");
  }

  attemptReduce(req: AttemptRequest): Promise<AttemptPayload> {
    return this.post("/api/attempt-reduce", req);
  }

  commit(req: CommitRequest): Promise<{ committed: string; library_size: number }> {
    return this.post("/api/commit", req);
  }

  history(): Promise<HistoryPayload> {
    return this.get("/api/history");
  }
}
