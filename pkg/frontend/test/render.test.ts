import { describe, expect, it } from "vitest";

import { renderSession } from "../src/render.js";
import type { SessionState } from "../src/types.js";
import { makeView, setLabel, verdictBanner, withError } from "../src/view.js";

const OPENS = [
  { id: 0, points: [0] },
  { id: 1, points: [0, 1] },
];

function state(overrides: Partial<SessionState> = {}): SessionState {
  return {
    format: 1,
    session_id: "s1",
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
    rounds: [
      { v: [0], w: [0, 1], u: [0], beta_notes: [], alpha_notes: [] },
    ],
    annotations: ["copy-alpha replied"],
    verdict: null,
    ...overrides,
  };
}

describe("session rendering is a pure function of the view", () => {
  it("same view, same markup", () => {
    const view = makeView(state(), OPENS);
    expect(renderSession(view)).toBe(renderSession(view));
  });

  it("snapshot: mid-session with palette and annotations", () => {
    const html = renderSession(makeView(state(), OPENS));
    expect(html).toMatchSnapshot();
    expect(html).toContain('data-open="0"');
    expect(html).toContain("{0,1}");
    expect(html).toContain("copy-alpha replied");
    expect(html).not.toContain("banner");
  });

  it("snapshot: finished session shows the verdict banner", () => {
    const done = state({
      to_move: "done",
      round: 3,
      palette: null,
      verdict: {
        winner: "alpha",
        rule: "i",
        certificate: { type: "point", point: 0 },
        reason: null,
      },
    });
    const html = renderSession(makeView(done, OPENS));
    expect(html).toMatchSnapshot();
    expect(html).toContain('class="banner alpha"');
    expect(html).toContain("alpha wins (i), certificate: point 0");
  });

  it("inline error renders the server reason verbatim", () => {
    const view = withError(makeView(state(), OPENS), "V not inside U[0]");
    expect(renderSession(view)).toContain('<div class="error" role="alert">V not inside U[0]</div>');
  });

  it("interval sets render as bars", () => {
    const sorgenfrey = state({
      backend: "sorgenfrey",
      palette: null,
      rounds: [
        {
          v: { a: "1/2", b: "1" },
          w: { a: "0", b: "1/2" },
          u: { a: "1/2", b: "1" },
          beta_notes: ["closure(V) ⊆ U"],
          alpha_notes: [],
        },
      ],
    });
    const html = renderSession(makeView(sorgenfrey, []));
    expect(html).toContain('class="bar"');
    expect(html).toContain("[1/2, 1)");
  });

  it("set labels", () => {
    expect(setLabel([0, 2])).toBe("{0,2}");
    expect(setLabel("whole")).toBe("ℚ");
    expect(setLabel({ a: "-1/2", b: "3" })).toBe("[-1/2, 3)");
    expect(setLabel(null)).toBe("—");
  });

  it("verdict banners", () => {
    expect(verdictBanner(null)).toBeNull();
    expect(
      verdictBanner({ winner: null, rule: "b", certificate: null, reason: "no certificate" }),
    ).toBe("undetermined (b): no certificate");
    expect(
      verdictBanner({
        winner: "beta",
        rule: "b",
        certificate: { type: "separation", p: "{y-x ∈ [0, 1)}" },
        reason: null,
      }),
    ).toContain("beta wins (b)");
  });
});
