// Server payload shapes. The server is authoritative: the client renders
// these verbatim and never derives legality on its own.

export interface SpaceJson {
  points: number;
  min_nbhds: number[][];
}

export interface OpenSet {
  id: number;
  points: number[];
}

export interface CatalogSpace {
  name: string;
  space: SpaceJson;
  opens: OpenSet[];
}

export interface Catalog {
  format: number;
  spaces: CatalogSpace[];
}

export type IntervalJson = { a: string; b: string };
export type SetJson = number[] | IntervalJson | "whole" | null;

export interface RoundJson {
  v: SetJson;
  w: SetJson;
  u: SetJson;
  beta_notes: string[];
  alpha_notes: string[];
}

export interface VerdictJson {
  winner: "alpha" | "beta" | null;
  rule: string;
  certificate: { type: string; [key: string]: unknown } | null;
  reason: string | null;
}

export interface SessionState {
  format: number;
  session_id: string;
  backend: "finite" | "sorgenfrey";
  kind: "BM" | "OD";
  rule: string;
  human_role: "alpha" | "beta";
  horizon: number;
  round: number;
  to_move: "alpha" | "beta" | "done";
  pending: { v: SetJson; w: SetJson } | null;
  constraint: SetJson;
  palette: number[] | null;
  rounds: RoundJson[];
  annotations: string[];
  verdict: VerdictJson | null;
}

export interface DeltaBaireCheck {
  format: number;
  regular: boolean;
  baire: boolean;
  delta_baire: boolean;
  witness: number[] | null;
}

export interface MovePayload {
  v?: number | IntervalJson;
  w?: number | IntervalJson;
  u?: number | IntervalJson;
}

// One view model per session: the server state plus the open-set table
// of the active space (for rendering palette ids as point sets).
export interface SessionView {
  state: SessionState;
  opens: OpenSet[];
  error: string | null;
}
