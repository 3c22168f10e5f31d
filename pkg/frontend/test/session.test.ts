// Golden round-trip against recorded server transcripts: the client
// replays a human-β session on the Sierpiński space and must end with
// the same AlphaWins(i) banner the directly scripted API session got;
// an illegal move must surface the server's reason verbatim.

import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { renderSession } from "../src/render.js";
import type { Catalog } from "../src/types.js";
import { makeView, verdictBanner, withError, withState } from "../src/view.js";

function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(new URL(`../fixtures/${name}`, import.meta.url), "utf8")) as T;
}

interface RecordedCall {
  method: string;
  path: string;
  body?: unknown;
  status: number;
  payload: unknown;
}

// Sequential fetch stub: asserts the client sends exactly the recorded
// requests and replays the recorded responses.
function fetchFromScript(calls: RecordedCall[]) {
  let cursor = 0;
  const fetchFn = async (url: string, init?: RequestInit) => {
    const expected = calls[cursor];
    if (!expected) throw new Error(`unexpected request ${url}`);
    cursor += 1;
    expect(init?.method ?? "GET").toBe(expected.method);
    expect(url).toBe(expected.path);
    if (expected.body !== undefined) {
      expect(JSON.parse(String(init?.body))).toEqual(expected.body);
    }
    return {
      ok: expected.status < 400,
      status: expected.status,
      json: async () => expected.payload,
    };
  };
  return { fetchFn, done: () => expect(cursor).toBe(calls.length) };
}

interface SessionTranscript {
  create: { request: Record<string, unknown>; response: { session_id: string; state: never } };
  moves: { request: { move: Record<string, unknown> }; status: number; response: never }[];
}

describe("session round-trip against recorded server fixtures", () => {
  it("three human-β rounds end in the recorded AlphaWins(i) banner", async () => {
    const catalog = fixture<Catalog>("catalog.json");
    const transcript = fixture<SessionTranscript>("session_beta_rounds.json");
    const sid = transcript.create.response.session_id;
    const calls: RecordedCall[] = [
      {
        method: "POST",
        path: "/api/session",
        body: transcript.create.request,
        status: 200,
        payload: transcript.create.response,
      },
      ...transcript.moves.map((m) => ({
        method: "POST",
        path: `/api/session/${sid}/move`,
        body: m.request,
        status: m.status,
        payload: m.response,
      })),
    ];
    const { fetchFn, done } = fetchFromScript(calls);
    const api = new ApiClient("", fetchFn);

    const created = await api.createSession(transcript.create.request as never);
    const opens = catalog.spaces.find((s) => s.name === "sierpinski")!.opens;
    let view = makeView(created.state, opens);
    expect(view.state.to_move).toBe("beta");
    for (const m of transcript.moves) {
      view = withState(view, await api.postMove(sid, m.request.move as never));
    }
    done();

    expect(view.state.to_move).toBe("done");
    const banner = verdictBanner(view.state.verdict);
    expect(banner).toBe("alpha wins (i), certificate: point 0");
    // consistency with the directly scripted session: same verdict object
    const direct = transcript.moves[transcript.moves.length - 1].response as {
      state: { verdict: unknown };
    };
    expect(view.state.verdict).toEqual(direct.state.verdict);
    expect(renderSession(view)).toContain('class="banner alpha"');
  });

  it("an illegal move surfaces the server reason verbatim", async () => {
    const catalog = fixture<Catalog>("catalog.json");
    const recorded = fixture<{
      request: { move: Record<string, unknown> };
      status: number;
      response: { code: string; reason: string };
    }>("illegal_move.json");
    const calls: RecordedCall[] = [
      {
        method: "POST",
        path: "/api/session/s0/move",
        body: recorded.request,
        status: recorded.status,
        payload: recorded.response,
      },
    ];
    const { fetchFn, done } = fetchFromScript(calls);
    const api = new ApiClient("", fetchFn);
    const opens = catalog.spaces.find((s) => s.name === "sierpinski")!.opens;

    let view = makeView(
      {
        format: 1,
        session_id: "s0",
        backend: "finite",
        kind: "OD",
        rule: "i",
        human_role: "beta",
        horizon: 3,
        round: 1,
        to_move: "beta",
        pending: null,
        constraint: [0],
        palette: [0],
        rounds: [],
        annotations: [],
        verdict: null,
      },
      opens,
    );
    try {
      await api.postMove("s0", recorded.request.move as never);
      expect.unreachable("the server rejected this move");
    } catch (err) {
      expect(err).toBeInstanceOf(ApiError);
      const apiErr = err as ApiError;
      expect(apiErr.code).toBe("illegal_move");
      view = withError(view, apiErr.reason);
    }
    done();
    expect(renderSession(view)).toContain(recorded.response.reason);
    expect(view.state.round).toBe(1); // state untouched by the rejection
  });

  it("delta-baire check fixture parses", async () => {
    const recorded = fixture<{ delta_baire: boolean; witness: number[] }>("delta_baire_check.json");
    const calls: RecordedCall[] = [
      {
        method: "POST",
        path: "/api/check/delta-baire",
        body: { space: "sierpinski" },
        status: 200,
        payload: recorded,
      },
    ];
    const { fetchFn, done } = fetchFromScript(calls);
    const api = new ApiClient("", fetchFn);
    const check = await api.checkDeltaBaire("sierpinski");
    done();
    expect(check.delta_baire).toBe(true);
    expect(check.witness).toEqual([0]);
  });
});
