import type { RoundJson, SessionView, SetJson } from "./types.js";
import { paletteEntries, setLabel, turnLabel, verdictBanner } from "./view.js";

// Rendering is a pure function of the view: same view, same markup.
// Interval sets additionally get a proportional bar so Sorgenfrey plays
// read as shrinking segments.

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

function intervalBar(s: SetJson): string {
  if (s === null || s === "whole" || Array.isArray(s)) return "";
  const a = parseRational(s.a);
  const b = parseRational(s.b);
  // bars are drawn relative to [-1, 2], the demo play window
  const lo = -1;
  const hi = 2;
  const left = Math.max(0, Math.min(100, ((a - lo) / (hi - lo)) * 100));
  const width = Math.max(1, Math.min(100 - left, ((b - a) / (hi - lo)) * 100));
  return `<span class="bar"><span class="fill" style="left:${left.toFixed(1)}%;width:${width.toFixed(1)}%"></span></span>`;
}

function parseRational(text: string): number {
  const [num, den] = text.split("/");
  return den === undefined ? Number(num) : Number(num) / Number(den);
}

function chip(label: string, s: SetJson): string {
  return `<span class="set"><b>${label}</b> ${esc(setLabel(s))}${intervalBar(s)}</span>`;
}

function renderRound(round: RoundJson, index: number): string {
  const notes = [...round.beta_notes, ...round.alpha_notes]
    .map((n) => `<span class="note">${esc(n)}</span>`)
    .join("");
  const w = round.w === null ? "" : chip("W", round.w);
  return `<li class="round" data-round="${index}">${chip("V", round.v)}${w}${chip("U", round.u)}${notes}</li>`;
}

export function renderSession(view: SessionView): string {
  const st = view.state;
  const parts: string[] = [];
  parts.push(
    `<header class="session"><span class="kind">${st.kind}</span> rule <span class="rule">${st.rule}</span>, ` +
      `round ${st.round}/${st.horizon}, ${esc(turnLabel(view))}</header>`,
  );
  parts.push(`<ol class="rounds">${st.rounds.map(renderRound).join("")}</ol>`);
  if (st.pending) {
    parts.push(
      `<div class="pending">engine β played ${chip("V", st.pending.v)}${
        st.pending.w !== null ? chip("W", st.pending.w) : ""
      }</div>`,
    );
  }
  if (st.annotations.length) {
    parts.push(
      `<div class="annotations">${st.annotations
        .map((a) => `<span class="badge">${esc(a)}</span>`)
        .join("")}</div>`,
    );
  }
  if (st.to_move === st.human_role && st.palette) {
    const buttons = paletteEntries(view)
      .map((p) => `<button class="palette" data-open="${p.id}">${esc(p.label)}</button>`)
      .join("");
    parts.push(`<div class="palette-row">${buttons}</div>`);
  }
  if (view.error) {
    parts.push(`<div class="error" role="alert">${esc(view.error)}</div>`);
  }
  const banner = verdictBanner(st.verdict);
  if (banner) {
    const cls = st.verdict!.winner ?? "undetermined";
    parts.push(`<div class="banner ${cls}">${esc(banner)}</div>`);
  }
  return parts.join("\n");
}
