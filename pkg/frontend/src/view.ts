import type { OpenSet, SessionState, SessionView, SetJson, VerdictJson } from "./types.js";

export function makeView(state: SessionState, opens: OpenSet[], error: string | null = null): SessionView {
  return { state, opens, error };
}

export function withState(view: SessionView, state: SessionState): SessionView {
  return { ...view, state, error: null };
}

export function withError(view: SessionView, error: string): SessionView {
  return { ...view, error };
}

export function setLabel(s: SetJson): string {
  if (s === null) return "—";
  if (s === "whole") return "ℚ";
  if (Array.isArray(s)) return `{${s.join(",")}}`;
  return `[${s.a}, ${s.b})`;
}

export function turnLabel(view: SessionView): string {
  const st = view.state;
  if (st.to_move === "done") return "finished";
  const who = st.to_move === st.human_role ? "you" : "engine";
  return `${st.to_move} to move (${who})`;
}

export function verdictBanner(verdict: VerdictJson | null): string | null {
  if (!verdict) return null;
  if (verdict.winner === null) return `undetermined (${verdict.rule}): ${verdict.reason ?? ""}`;
  const cert = verdict.certificate ? `, certificate: ${describeCertificate(verdict.certificate)}` : "";
  return `${verdict.winner} wins (${verdict.rule})${cert}`;
}

function describeCertificate(cert: { type: string; [key: string]: unknown }): string {
  switch (cert.type) {
    case "point":
      return `point ${cert.point}`;
    case "accumulation":
      return `accumulation point ${cert.point} at rounds ${(cert.hit_rounds as number[]).join(",")}`;
    case "compact":
      return `compact K = {${(cert.k as number[]).join(",")}}`;
    case "separation":
      return `separation data for ${cert.p}`;
    default:
      return cert.type;
  }
}

// palette entries for the human's turn: id plus the point set it names
export function paletteEntries(view: SessionView): { id: number; label: string }[] {
  const ids = view.state.palette ?? [];
  return ids.map((id) => {
    const open = view.opens.find((o) => o.id === id);
    return { id, label: open ? setLabel(open.points) : `#${id}` };
  });
}
