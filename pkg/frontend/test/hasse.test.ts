import { describe, expect, it } from "vitest";

import { layout, renderHasseSvg, specializationEdges } from "../src/hasse.js";
import type { SpaceJson } from "../src/types.js";

const SIERPINSKI: SpaceJson = { points: 2, min_nbhds: [[0], [0, 1]] };
const DISCRETE3: SpaceJson = { points: 3, min_nbhds: [[0], [1], [2]] };
const CHAIN3: SpaceJson = { points: 3, min_nbhds: [[0], [0, 1], [0, 1, 2]] };

describe("specialization diagram", () => {
  it("sierpinski: two nodes, one edge 1 -> 0", () => {
    expect(specializationEdges(SIERPINSKI)).toEqual([{ from: 1, to: 0 }]);
    const svg = renderHasseSvg(SIERPINSKI);
    expect(svg.match(/<circle/g)).toHaveLength(2);
    expect(svg).toContain('data-edge="1-0"');
  });

  it("discrete 3: three isolated nodes", () => {
    expect(specializationEdges(DISCRETE3)).toEqual([]);
    const svg = renderHasseSvg(DISCRETE3);
    expect(svg.match(/<circle/g)).toHaveLength(3);
    expect(svg).not.toContain("<line");
  });

  it("chain 3: a path via covering edges only", () => {
    expect(specializationEdges(CHAIN3)).toEqual([
      { from: 1, to: 0 },
      { from: 2, to: 1 },
    ]);
    const { nodes } = layout(CHAIN3);
    const layers = Object.fromEntries(nodes.map((n) => [n.id, n.layer]));
    expect(layers).toEqual({ 0: 0, 1: 1, 2: 2 });
  });

  it("indistinguishable points share a layer", () => {
    const indiscrete: SpaceJson = { points: 2, min_nbhds: [[0, 1], [0, 1]] };
    const { nodes, edges } = layout(indiscrete);
    expect(edges).toHaveLength(2); // one edge each way
    expect(nodes[0].layer).toBe(nodes[1].layer);
  });
});
