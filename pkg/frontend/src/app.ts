import { ApiClient, ApiError } from "./api.js";
import { renderHasseSvg } from "./hasse.js";
import { renderSession } from "./render.js";
import type { CatalogSpace, SessionView } from "./types.js";
import { makeView, withError, withState } from "./view.js";

// Browser bootstrap: one active session per tab, optimistic updates
// disabled — every transition waits for the server's state.

const api = new ApiClient();

let view: SessionView | null = null;
let sessionId: string | null = null;
let pickedV: number | null = null;

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el;
}

function paint(): void {
  if (view) $("session").innerHTML = renderSession(view);
  for (const btn of $("session").querySelectorAll<HTMLButtonElement>("button.palette")) {
    btn.addEventListener("click", () => pick(Number(btn.dataset.open)));
  }
}

async function pick(openId: number): Promise<void> {
  if (!view || !sessionId) return;
  const st = view.state;
  try {
    if (st.human_role === "alpha") {
      view = withState(view, await api.postMove(sessionId, { u: openId }));
    } else if (st.kind === "OD") {
      if (pickedV === null) {
        pickedV = openId; // first click picks V, second picks W
        return;
      }
      const move = { v: pickedV, w: openId };
      pickedV = null;
      view = withState(view, await api.postMove(sessionId, move));
    } else {
      view = withState(view, await api.postMove(sessionId, { v: openId }));
    }
  } catch (err) {
    if (err instanceof ApiError) view = withError(view, err.reason);
    else throw err;
  }
  paint();
}

async function showCatalog(): Promise<void> {
  const catalog = await api.catalog();
  const holder = $("catalog");
  holder.innerHTML = catalog.spaces
    .map(
      (s: CatalogSpace) =>
        `<figure class="space" data-space="${s.name}"><figcaption>${s.name}</figcaption>${renderHasseSvg(s.space)}</figure>`,
    )
    .join("");
  for (const fig of holder.querySelectorAll<HTMLElement>("figure.space")) {
    fig.addEventListener("click", () => start(fig.dataset.space!, catalog.spaces));
  }
}

async function start(name: string, spaces: CatalogSpace[]): Promise<void> {
  const created = await api.createSession({
    backend: "finite",
    space: name,
    kind: "OD",
    rule: "i",
    human_role: "beta",
    engine_strategy: "copy",
    horizon: 3,
  });
  sessionId = created.session_id;
  const opens = spaces.find((s) => s.name === name)?.opens ?? [];
  view = makeView(created.state, opens);
  paint();
}

window.addEventListener("DOMContentLoaded", () => {
  showCatalog().catch((err) => {
    $("catalog").innerHTML = `<div class="error">server unreachable: ${String(err)}</div>`;
  });
});
