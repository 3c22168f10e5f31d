import type { SpaceJson } from "./types.js";

// Specialization preorder from the minimal-neighborhood table:
// y -> x when x lies in min_nbhd(y).  The diagram draws the covering
// (transitively reduced) edges only, layered by longest path.

export interface HasseEdge {
  from: number;
  to: number;
}

export interface HasseLayout {
  nodes: { id: number; layer: number; slot: number }[];
  edges: HasseEdge[];
}

export function specializationEdges(space: SpaceJson): HasseEdge[] {
  const n = space.points;
  const leq = (y: number, x: number) => y !== x && space.min_nbhds[y].includes(x);
  const edges: HasseEdge[] = [];
  for (let y = 0; y < n; y++) {
    for (const x of space.min_nbhds[y]) {
      if (x === y || !leq(y, x)) continue;
      // drop composite edges: y -> m -> x already implies y -> x
      let isCover = true;
      for (let m = 0; m < n; m++) {
        if (m !== x && m !== y && leq(y, m) && leq(m, x)) {
          isCover = false;
          break;
        }
      }
      // indistinguishable points keep one edge in each direction
      if (isCover) edges.push({ from: y, to: x });
    }
  }
  return edges;
}

export function layout(space: SpaceJson): HasseLayout {
  const n = space.points;
  const edges = specializationEdges(space);
  // layer = longest strict chain of specializations below the node;
  // mutual (indistinguishable) pairs share a layer, so only one-way
  // edges contribute to depth and the relaxation terminates
  const leq = (y: number, x: number) => y !== x && space.min_nbhds[y].includes(x);
  const strict = edges.filter((e) => !leq(e.to, e.from));
  const depth = new Array<number>(n).fill(0);
  let changed = true;
  let guard = 0;
  while (changed && guard < n + 2) {
    changed = false;
    guard += 1;
    for (const e of strict) {
      if (depth[e.from] < depth[e.to] + 1) {
        depth[e.from] = depth[e.to] + 1;
        changed = true;
      }
    }
  }
  const slots = new Map<number, number>();
  const nodes = [];
  for (let id = 0; id < n; id++) {
    const layer = depth[id];
    const slot = slots.get(layer) ?? 0;
    slots.set(layer, slot + 1);
    nodes.push({ id, layer, slot });
  }
  return { nodes, edges };
}

const STEP_X = 70;
const STEP_Y = 60;
const RADIUS = 14;

export function renderHasseSvg(space: SpaceJson): string {
  const { nodes, edges } = layout(space);
  const maxLayer = nodes.reduce((m, nd) => Math.max(m, nd.layer), 0);
  const width = Math.max(...nodes.map((nd) => nd.slot + 1), 1) * STEP_X + STEP_X;
  const height = (maxLayer + 1) * STEP_Y + STEP_Y;
  const cx = (nd: { slot: number }) => (nd.slot + 1) * STEP_X;
  const cy = (nd: { layer: number }) => height - (nd.layer + 1) * STEP_Y + STEP_Y / 2;
  const byId = new Map(nodes.map((nd) => [nd.id, nd]));
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" class="hasse">`,
  ];
  for (const e of edges) {
    const a = byId.get(e.from)!;
    const b = byId.get(e.to)!;
    parts.push(
      `<line x1="${cx(a)}" y1="${cy(a)}" x2="${cx(b)}" y2="${cy(b)}" class="edge" data-edge="${e.from}-${e.to}"/>`,
    );
  }
  for (const nd of nodes) {
    parts.push(
      `<circle cx="${cx(nd)}" cy="${cy(nd)}" r="${RADIUS}" class="node" data-point="${nd.id}"/>`,
      `<text x="${cx(nd)}" y="${cy(nd) + 4}" text-anchor="middle">${nd.id}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}
