import type { Catalog, DeltaBaireCheck, MovePayload, SessionState } from "./types.js";

export class ApiError extends Error {
  readonly code: string;
  readonly reason: string;
  readonly status: number;

  constructor(code: string, reason: string, status: number) {
    super(`${code}: ${reason}`);
    this.code = code;
    this.reason = reason;
    this.status = status;
  }
}

export interface SessionRequest {
  backend: "finite" | "sorgenfrey";
  space?: string;
  kind: "BM" | "OD";
  rule: string;
  human_role: "alpha" | "beta";
  engine_strategy: string;
  horizon: number;
  seed?: number;
}

type FetchLike = (url: string, init?: RequestInit) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

// Thin client over the session API; every error comes back as the
// server's own {code, reason} payload, surfaced verbatim.
export class ApiClient {
  private readonly base: string;
  private readonly fetchFn: FetchLike;

  constructor(base = "", fetchFn: FetchLike = (url, init) => fetch(url, init)) {
    this.base = base;
    this.fetchFn = fetchFn;
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const resp = await this.fetchFn(this.base + path, init);
    const payload = (await resp.json()) as Record<string, unknown>;
    if (!resp.ok) {
      throw new ApiError(
        String(payload.code ?? "error"),
        String(payload.reason ?? resp.status),
        resp.status,
      );
    }
    return payload as T;
  }

  catalog(): Promise<Catalog> {
    return this.request("GET", "/api/catalog/spaces");
  }

  checkDeltaBaire(space: unknown): Promise<DeltaBaireCheck> {
    return this.request("POST", "/api/check/delta-baire", { space });
  }

  async createSession(req: SessionRequest): Promise<{ session_id: string; state: SessionState }> {
    return this.request("POST", "/api/session", req);
  }

  async getSession(id: string): Promise<SessionState> {
    return this.request("GET", `/api/session/${id}`);
  }

  async postMove(id: string, move: MovePayload): Promise<SessionState> {
    const out = await this.request<{ state: SessionState }>(
      "POST",
      `/api/session/${id}/move`,
      { move },
    );
    return out.state;
  }
}
